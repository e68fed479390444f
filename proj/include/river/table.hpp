#pragma once

// Cohomology tables gamma(F) = { h^i(F(d)) } of vector bundles on P^n.
//
// A table is an immutable value backed either by a generator (a sum of
// homogeneous bundles, a Kunneth pushforward, or duals/twists/sums of these),
// which answers every query, or by a literal window copied from a printed
// table, which answers only inside the window and never extrapolates.
//
// Display convention: h^i(F(d)) sits in row i and display column i + d.
// Regularity indices are read column by column in this display.

#include "river/numeric.hpp"
#include "river/partitions.hpp"
#include "river/polynomial.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace river {

/// Closed range [lo, hi] of display columns.
struct ColumnRange {
  long lo = 0;
  long hi = -1;

  long width() const { return hi - lo + 1; }
  bool contains(long c) const { return lo <= c && c <= hi; }
  friend bool operator==(const ColumnRange&, const ColumnRange&) = default;
};

/// Parses "lo:hi".
ColumnRange parse_column_range(std::string_view text);

/// Positive multiplicity times the table of S_lambda(Q).
using HomogeneousTerm = std::pair<Rational, GenPartition>;

class CohomologyTable {
 public:
  enum class Backend { BottSum, Kunneth, Dual, Twist, Sum, Literal };

  /// Sum of multiplicity * S_lambda(Q). Multiplicities must be positive;
  /// every partition must have length n.
  static CohomologyTable bott_sum(int n, std::vector<HomogeneousTerm> terms);
  static CohomologyTable homogeneous(const GenPartition& lambda);
  static CohomologyTable zero(int n) { return bott_sum(n, {}); }
  /// pi_* O(a_1, ..., a_m) from (P^1)^m to P^m.
  static CohomologyTable kunneth(std::vector<long> degrees);
  /// rows(i, c - window.lo) holds the entry in row i, display column c.
  /// rows must have n + 1 rows, window.width() columns, nonnegative entries.
  static CohomologyTable literal(int n, ColumnRange window, IntegerMatrix rows);

  int n() const { return n_; }
  Backend backend() const;

  /// h^i(F(d)). Throws WindowExceeded for literal data outside its window,
  /// and InvalidArgument if a rational generator yields a non-integer.
  Integer entry(int i, long d) const;
  /// Same as entry but exact rational; used for rational combinations.
  Rational value(int i, long d) const;

  /// True when no literal window is involved, so every query succeeds.
  bool certified() const;
  /// Display columns outside of which only row 0 (to the right) or only row
  /// n (to the left) can be nonzero. For literal data, the window.
  ColumnRange support() const;
  /// Columns where queries are answered; nullopt means everywhere.
  std::optional<ColumnRange> domain() const;

  // Backend accessors; empty when the backend differs.
  const std::vector<HomogeneousTerm>* bott_terms() const;
  const std::vector<long>* kunneth_degrees() const;

  struct Node;

 private:
  CohomologyTable(int n, std::shared_ptr<const Node> node) : n_(n), node_(std::move(node)) {}

  friend CohomologyTable dual(const CohomologyTable&);
  friend CohomologyTable twist(const CohomologyTable&, long);
  friend CohomologyTable add(const CohomologyTable&, const CohomologyTable&);
  friend CohomologyTable scale(const CohomologyTable&, const Integer&);
  friend std::optional<std::vector<HomogeneousTerm>> homogeneous_terms(const CohomologyTable&);
  friend Polynomial hilbert_polynomial(const CohomologyTable&);

  int n_ = 0;
  std::shared_ptr<const Node> node_;
};

/// Serre duality: entry(dual, i, d) = entry(t, n-i, -d-n-1).
CohomologyTable dual(const CohomologyTable& t);
/// entry(twist(t, s), i, d) = entry(t, i, d + s), i.e. F(s).
CohomologyTable twist(const CohomologyTable& t, long s);
/// Direct sum. Throws DimensionMismatch.
CohomologyTable add(const CohomologyTable& a, const CohomologyTable& b);
/// k copies, k > 0.
CohomologyTable scale(const CohomologyTable& t, const Integer& k);

/// Rewrites t as a sum of homogeneous bundles when it is built only from
/// BottSum nodes via dual, twist, add and scale. Terms are merged and sorted.
std::optional<std::vector<HomogeneousTerm>> homogeneous_terms(const CohomologyTable& t);

/// A regularity or coregularity index. window_limited marks values read off
/// a literal window that does not show where the index actually is; the
/// value is then the bound the window supports.
struct IndexValue {
  ExtInt value;
  bool window_limited = false;

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

/// reg^k: the smallest m with h^j(F(m-j)) = 0 for all j > k. Negative
/// infinity for k >= n and for the zero table. Throws InvalidArgument for k < 0.
IndexValue reg(const CohomologyTable& t, int k);
/// coreg^k: the largest m with h^j(F(m-j)) = 0 for all j < n-k.
IndexValue coreg(const CohomologyTable& t, int k);

struct RegularityProfile {
  int n = 0;
  std::vector<IndexValue> reg;    // k = 0..n-1
  std::vector<IndexValue> coreg;  // k = 0..n-1

  bool any_window_limited() const;
};

RegularityProfile regularity_profile(const CohomologyTable& t);

/// At most one nonzero h^i(F(d)) for every d. Generator tables are checked
/// over their whole support; literal tables over window (default: the
/// literal window), counting only cells inside it.
bool is_natural(const CohomologyTable& t, std::optional<ColumnRange> window = std::nullopt);

/// Natural, and the Hilbert polynomial has n distinct integer roots. A
/// literal table needs chi supplied, otherwise Undecidable is thrown.
bool is_supernatural(const CohomologyTable& t, const std::optional<Polynomial>& chi = std::nullopt);

/// d -> chi(F(d)). Throws Undecidable for tables involving literal data.
Polynomial hilbert_polynomial(const CohomologyTable& t);

/// A summand H^j(F(e-j)) ⊗ Omega^{j-e}(j-e) of the Beilinson monad term B^e.
struct BeilinsonTerm {
  int j = 0;
  Integer multiplicity;

  friend bool operator==(const BeilinsonTerm&, const BeilinsonTerm&) = default;
};

/// Nonzero summands of B^e, read off display column e, ascending j.
std::vector<BeilinsonTerm> beilinson_terms(const CohomologyTable& t, long e);

/// Entries of the window as a dense (n+1) x width matrix, row i = h^i.
RationalMatrix window_values(const CohomologyTable& t, ColumnRange window);

}  // namespace river
