#pragma once

// Decomposition of the cohomology table of a 0-regular bundle into a positive
// rational combination of tables of homogeneous bundles S_lambda(Q) along a
// chain lambda^0 <= lambda^1 <= ... of partitions.
//
// The decomposition is found greedily. The next partition is read off the
// regularity indices of what is left (lambda_k = -reg^k of the residual),
// which picks the smallest partition still present, and its coefficient is
// the largest c keeping the residual nonnegative on the working window.

#include "river/error.hpp"
#include "river/partitions.hpp"
#include "river/table.hpp"

#include <json.hpp>

#include <vector>

namespace river {

struct DecompositionTerm {
  Rational coefficient;
  GenPartition lambda;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct Decomposition {
  int n = 0;
  /// Smallest partition first.
  std::vector<DecompositionTerm> terms;
  /// The residual vanished on the window and, for generator input, the
  /// Hilbert polynomials agree exactly.
  bool residual_zero = false;
  /// The partitions are totally ordered by containment.
  bool chain_certified = false;
  /// Display columns the decomposition was verified on.
  ColumnRange window;
};

class NotZeroRegular : public Error {
 public:
  using Error::Error;
};

/// The greedy left the scope it can certify: nonzero residual after the
/// iteration cap, a zero coefficient, a pivot it cannot read off the window,
/// or partitions that do not form a chain. partial() holds what was found.
class NotDecomposableWithinScope : public Error {
 public:
  NotDecomposableWithinScope(const std::string& what, Decomposition partial)
      : Error(what), partial_(std::move(partial)) {}

  const Decomposition& partial() const { return partial_; }

 private:
  Decomposition partial_;
};

inline constexpr int kDecompositionIterationCap = 64;

/// Requires reg^0(t) <= 0. Throws NotZeroRegular or NotDecomposableWithinScope.
Decomposition decompose(const CohomologyTable& t);

/// sum coefficient * table(S_lambda Q); the zero table for no terms.
CohomologyTable recompose(const Decomposition& d);

/// [{"coeff": "p/q", "lambda": "a,b,c"}, ...]
nlohmann::json decomposition_to_json(const Decomposition& d);

}  // namespace river
