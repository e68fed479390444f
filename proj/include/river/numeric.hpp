#pragma once

// Exact scalar types shared by every module, plus the Eigen glue that lets
// them sit inside Eigen::Matrix.

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace river {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
/// Accepts "p", "p/q" and surrounding whitespace; result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// num/den in lowest terms.
inline Rational frac(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

/// Integers extended by -inf and +inf. Regularity indices of the zero sheaf
/// and of rows beyond the ambient dimension are infinite; they are never
/// encoded as sentinel integers.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInfinity, Finite, PosInfinity };

  constexpr ExtInt() = default;
  constexpr ExtInt(long value) : kind_(Kind::Finite), value_(value) {}  // NOLINT

  static constexpr ExtInt neg_infinity() { return ExtInt(Kind::NegInfinity); }
  static constexpr ExtInt pos_infinity() { return ExtInt(Kind::PosInfinity); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  /// Throws std::logic_error when infinite.
  long value() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// Throws std::domain_error for (-inf) + (+inf).
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a) {
    switch (a.kind_) {
      case Kind::NegInfinity: return pos_infinity();
      case Kind::PosInfinity: return neg_infinity();
      default: return ExtInt(-a.value_);
    }
  }
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

  /// "-inf", "+inf" or the decimal value.
  std::string str() const;

 private:
  constexpr explicit ExtInt(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  long value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.str(); }

}  // namespace river

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 150
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace river {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

}  // namespace river
