#pragma once

// Exact linear algebra in the exterior algebra of a 5-dimensional space W*:
// the map
//     Lambda^2 W* -> Lambda^4 W* ⊕ Lambda^4 W*,   omega -> (omega∧eta1, omega∧eta2)
// for a pair of 2-forms, and its kernel. Since dim Lambda^2 = 10 = 2 * dim
// Lambda^4, a nonzero kernel for every pair is a genuine constraint.
//
// Bases are the increasing monomials e_i∧e_j (i < j) and e_i∧e_j∧e_k∧e_l,
// 1-based, in lexicographic order.

#include "river/numeric.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <utility>

namespace river {

using TwoForm = Eigen::Matrix<Rational, 10, 1>;
using WedgeMatrix = Eigen::Matrix<Rational, 10, 10>;

/// (i, j) with 1 <= i < j <= 5 for each coordinate of a TwoForm.
const std::array<std::pair<int, int>, 10>& two_form_basis();
/// Coordinate of e_i∧e_j. Throws InvalidArgument unless 1 <= i < j <= 5.
int two_form_index(int i, int j);

TwoForm zero_two_form();
/// e_i∧e_j
TwoForm monomial_two_form(int i, int j);

/// Parses [[[i, j], "p/q"], ...]; repeated pairs add up.
TwoForm two_form_from_json(const nlohmann::json& j);
/// Nonzero coefficients only, in basis order.
nlohmann::json two_form_to_json(const TwoForm& eta);

/// Coefficients p/q with p uniform in [-9, 9], q in [1, 4].
TwoForm random_two_form(std::mt19937_64& rng);

/// Rows 0..4: omega∧eta1, rows 5..9: omega∧eta2; column = omega's monomial.
WedgeMatrix wedge_matrix(const TwoForm& eta1, const TwoForm& eta2);

/// 10 - rank(wedge_matrix(eta1, eta2)), rank by fraction-free elimination.
int kernel_dim(const TwoForm& eta1, const TwoForm& eta2);

/// Rank by Bareiss fraction-free elimination. Scalar must be an integral
/// domain with exact division (Integer).
template <class Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < rows && a(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    a.row(rank).swap(a.row(pivot_row));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a(i, j) = Scalar((a(i, j) * a(rank, col) - a(i, col) * a(rank, j)) / previous);
      }
      a(i, col) = 0;
    }
    previous = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Scales each row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

Eigen::Index rank_over_rationals(const RationalMatrix& m);

/// Rank of m reduced modulo the prime p (p < 2^62). Can be smaller than the
/// rational rank for unlucky primes, never larger.
Eigen::Index rank_mod_prime(const IntegerMatrix& m, std::uint64_t p);

}  // namespace river
