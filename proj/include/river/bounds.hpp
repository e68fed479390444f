#pragma once

// Bounds on the regularity indices of a tensor product of bundles:
//
//   reg^p(F ⊗ G)   <= min_{k+l=p} (reg^k F + reg^l G)
//   coreg^p(F ⊗ G) >= 1 + max_{k+l=p} (coreg^k F + coreg^l G)
//
// checked on tables, together with their sharpness for homogeneous bundles
// and the cohomological criterion for Ext^2(F, F) = 0. Only the vector
// bundle case is covered; the coherent-sheaf variant needs Tor information
// that a table does not carry.

#include "river/error.hpp"
#include "river/partitions.hpp"
#include "river/table.hpp"

#include <vector>

namespace river {

/// Raised by lr_witness when no term satisfies the bound. Reaching it would
/// contradict the representation-theoretic statement it checks.
class NoWitness : public Error {
 public:
  using Error::Error;
};

struct BoundEntry {
  int p = 0;
  ExtInt bound;
  ExtInt actual;
  bool satisfied = false;
  bool equality = false;
  /// False when any index involved was window-limited; the entry is then
  /// advisory only.
  bool certified = true;
};

struct BoundReport {
  enum class Side { Reg, Coreg };

  Side side = Side::Reg;
  std::vector<BoundEntry> entries;  // p = 0..n-1

  bool all_satisfied() const;
  bool all_equal() const;
  /// Some certified entry fails its inequality.
  bool certified_violation() const;
};

struct TensorBoundReports {
  BoundReport reg;
  BoundReport coreg;
};

/// F ⊗ G for sums of homogeneous bundles, expanded by Littlewood-Richardson.
/// Throws InvalidArgument for any other operand and DimensionMismatch for
/// different ambient spaces.
CohomologyTable tensor_homogeneous(const CohomologyTable& f, const CohomologyTable& g);

/// Evaluates both bounds for every p, with product_table supplied by the
/// caller (it may be a printed table).
TensorBoundReports check_tensor_bounds(const CohomologyTable& f, const CohomologyTable& g,
                                       const CohomologyTable& product_table);

/// reg^p(S_lambda Q ⊗ S_mu Q) against -max_{k+l=p} (lambda_k + mu_l).
BoundReport check_sharpness(const GenPartition& lambda, const GenPartition& mu);

/// The lexicographically smallest nu in lr_expand(lambda, mu) with
/// nu_p <= max_{k+l=p} (lambda_k + mu_l). Throws NoWitness if none exists
/// and InvalidArgument unless 0 <= p < n.
GenPartition lr_witness(const GenPartition& lambda, const GenPartition& mu, int p);

struct UnobstructedReport {
  enum class Branch { None, First, Second, Both };

  bool holds = false;
  Branch branch = Branch::None;
  ExtInt reg0_minus_coreg1;
  ExtInt reg1_minus_coreg0;
  bool window_limited = false;
};

/// reg^0 - coreg^1 <= 3 or reg^1 - coreg^0 <= 3 forces Ext^2(F, F) = 0.
UnobstructedReport unobstructed_criterion(const CohomologyTable& t);

const char* to_string(UnobstructedReport::Branch b);

}  // namespace river
