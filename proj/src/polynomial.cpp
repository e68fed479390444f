#include "river/polynomial.hpp"

#include "river/error.hpp"

#include <algorithm>

namespace river {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

void Polynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& d) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + *it;
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  Polynomial inner = linear(a, b);
  Polynomial result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * inner + constant(*it);
  }
  return result;
}

std::vector<Integer> Polynomial::integer_roots() const {
  if (is_zero()) throw InvalidArgument("integer_roots of the zero polynomial");
  std::vector<Integer> roots;
  if (degree() == 0) return roots;

  // |root| <= 1 + max |c_k / c_lead|
  Rational bound = 0;
  for (int k = 0; k < degree(); ++k) {
    Rational r = abs(coeffs_[k] / coeffs_.back());
    if (r > bound) bound = r;
  }
  Integer limit = 1 + bound.get_num() / bound.get_den() + 1;
  for (Integer x = -limit; x <= limit; ++x) {
    if ((*this)(Rational(x)) == 0) roots.push_back(x);
  }
  return roots;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[k] += q.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + Rational(-1) * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "d";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace river
