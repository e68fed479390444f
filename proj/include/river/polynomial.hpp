#pragma once

#include "river/numeric.hpp"

#include <string>
#include <vector>

namespace river {

/// Univariate polynomial in the twist variable d with exact rational
/// coefficients. coeffs()[k] multiplies d^k; the leading coefficient is never
/// zero (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// a·d + b
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& d) const;

  /// p(a·d + b)
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Distinct integer roots in increasing order, found by exact evaluation
  /// over the Cauchy bound. Throws InvalidArgument for the zero polynomial.
  std::vector<Integer> integer_roots() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

  /// e.g. "1/2*d^2 + 3/2*d + 1"
  std::string str() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace river
