#pragma once

// Generalized partitions indexing homogeneous bundles S_lambda(Q) on P^n,
// Weyl dimensions, and Littlewood-Richardson products.
//
// INDEX CONVENTION. A partition of length n is written largest part first,
// lambda_{n-1} >= ... >= lambda_0, and lambda_k always refers to that
// labelling: lambda_0 is the SMALLEST part. Storage follows the written
// order, so parts()[0] == lambda_{n-1} and parts()[n-1] == lambda_0. Use
// part(k) for lambda_k and never index parts() with a k.
//
// Parts may be negative. Adding c to every part twists by O(c), since
// det Q = O(1).

#include "river/numeric.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace river {

class GenPartition {
 public:
  GenPartition() = default;
  /// Parts largest first. Throws InvalidArgument unless weakly decreasing
  /// and nonempty.
  explicit GenPartition(std::vector<long> parts_largest_first);
  GenPartition(std::initializer_list<long> parts_largest_first)
      : GenPartition(std::vector<long>(parts_largest_first)) {}

  /// The zero partition of length n (the structure sheaf).
  static GenPartition zero(int n);
  /// (t, ..., t): the line bundle O(t).
  static GenPartition constant(int n, long t);
  /// Parses "4,1,0" (largest first).
  static GenPartition parse(std::string_view text);

  int n() const { return static_cast<int>(parts_.size()); }
  std::span<const long> parts() const { return parts_; }
  /// lambda_k, k in 0..n-1. Throws InvalidArgument otherwise.
  long part(int k) const;
  long largest() const { return parts_.front(); }
  long smallest() const { return parts_.back(); }
  /// Sum of parts.
  long size() const;

  /// Adds c to every part.
  GenPartition shifted(long c) const;
  /// The partition of the dual representation: (-lambda_0, ..., -lambda_{n-1}).
  GenPartition dual() const;

  /// "4,1,0"
  std::string str() const;

  friend bool operator==(const GenPartition&, const GenPartition&) = default;
  /// Lexicographic on the largest-first parts; used only for canonical
  /// ordering, not the containment order (see leq).
  friend std::strong_ordering operator<=>(const GenPartition& a, const GenPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<long> parts_;
};

/// Componentwise order (containment of Young diagrams). Throws
/// DimensionMismatch on length mismatch.
bool leq(const GenPartition& lambda, const GenPartition& mu);

/// Weyl dimension of the GL_N representation with highest weight nu, where
/// nu is weakly decreasing (largest first) of length N.
Integer schur_dim(std::span<const long> nu);
inline Integer schur_dim(const GenPartition& nu) { return schur_dim(nu.parts()); }

/// Multiset of (nu, c^nu_{lambda mu}) sorted by nu, nonzero multiplicities only.
using LRExpansion = std::vector<std::pair<GenPartition, Integer>>;

/// S_lambda ⊗ S_mu in rank n = lambda.n(). Terms with more than n rows are
/// dropped. Negative parts are handled by shifting.
LRExpansion lr_expand(const GenPartition& lambda, const GenPartition& mu);

}  // namespace river
