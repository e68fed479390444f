#pragma once

// Cohomology of twisted homogeneous bundles S_lambda(Q)(d) on P^n, where Q
// is the universal rank-n quotient bundle, computed with Bott's algorithm in
// characteristic zero.

#include "river/numeric.hpp"
#include "river/partitions.hpp"
#include "river/polynomial.hpp"

#include <optional>

namespace river {

/// The single nonvanishing cohomology group of S_lambda(Q)(d), if any.
struct BottCell {
  int degree = 0;
  Integer dim;

  friend bool operator==(const BottCell&, const BottCell&) = default;
};

/// std::nullopt when all cohomology vanishes.
using BottResult = std::optional<BottCell>;

/// Dotted Weyl action on beta = (lambda_{n-1}+n, ..., lambda_0+1, -d): a
/// repeated entry means everything vanishes; otherwise the cohomological
/// degree is the number of inversions of beta and the dimension is the Weyl
/// dimension (over n+1) of sorted(beta) - (n, n-1, ..., 0).
BottResult bott_cohomology(const GenPartition& lambda, long d);

/// h^i(S_lambda(Q)(d)) for any i; zero off the nonvanishing degree.
Integer bott_entry(const GenPartition& lambda, int i, long d);

/// reg^k S_lambda(Q) = -lambda_k. Throws InvalidArgument unless 0 <= k < n.
long homogeneous_reg(const GenPartition& lambda, int k);

/// chi(S_lambda(Q)(d)) as a polynomial of degree n in d. Its roots are
/// -(lambda_k + k + 1), k = 0..n-1.
Polynomial chi_polynomial(const GenPartition& lambda);

}  // namespace river
