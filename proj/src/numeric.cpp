#include "river/numeric.hpp"

#include "river/error.hpp"

#include <cctype>
#include <stdexcept>

namespace river {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal(s)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

long ExtInt::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtInt::value() on " + str());
  return value_;
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  using K = ExtInt::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return ExtInt(a.value_ + b.value_);
  if ((a.kind_ == K::NegInfinity && b.kind_ == K::PosInfinity) ||
      (a.kind_ == K::PosInfinity && b.kind_ == K::NegInfinity)) {
    throw std::domain_error("ExtInt: -inf + +inf is undefined");
  }
  return a.kind_ != K::Finite ? a : b;
}

std::string ExtInt::str() const {
  switch (kind_) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    default: return std::to_string(value_);
  }
}

}  // namespace river
