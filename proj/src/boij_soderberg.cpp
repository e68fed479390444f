#include "river/boij_soderberg.hpp"

#include <algorithm>
#include <optional>

namespace river {

namespace {

// reg^k read off a window grid: one past the last column with a nonzero
// entry strictly above row k. nullopt if there is none.
std::optional<long> grid_reg(const RationalMatrix& grid, ColumnRange window, int k) {
  for (Eigen::Index c = grid.cols() - 1; c >= 0; --c) {
    for (Eigen::Index j = k + 1; j < grid.rows(); ++j) {
      if (grid(j, c) != 0) return window.lo + c + 1;
    }
  }
  return std::nullopt;
}

bool is_zero(const RationalMatrix& grid) {
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (grid(r, c) != 0) return false;
    }
  }
  return true;
}

bool is_chain(const std::vector<DecompositionTerm>& terms) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!leq(terms[i - 1].lambda, terms[i].lambda)) return false;
  }
  return true;
}

}  // namespace

Decomposition decompose(const CohomologyTable& t) {
  const int n = t.n();
  const IndexValue r0 = reg(t, 0);
  if (r0.value > ExtInt(0)) {
    throw NotZeroRegular("decompose needs reg^0 <= 0, got reg^0 = " + r0.value.str() +
                         "; twist the bundle first");
  }

  Decomposition out;
  out.n = n;
  if (t.certified()) {
    ColumnRange s = t.support();
    if (s.hi < s.lo) s = {0, 0};
    out.window = {s.lo - n - 3, s.hi + n + 3};
  } else {
    out.window = *t.domain();
  }

  RationalMatrix residual = window_values(t, out.window);
  for (int iter = 0; iter < kDecompositionIterationCap && !is_zero(residual); ++iter) {
    std::vector<long> parts;
    for (int k = n - 1; k >= 0; --k) {
      auto r = grid_reg(residual, out.window, k);
      if (!r) {
        throw NotDecomposableWithinScope(
            "residual has no entries above row " + std::to_string(k) + " to read a pivot from", out);
      }
      if (*r > out.window.hi) {
        throw NotDecomposableWithinScope("pivot not visible inside the window", out);
      }
      parts.push_back(-*r);
    }
    const GenPartition lambda(std::move(parts));
    const RationalMatrix pivot = window_values(CohomologyTable::homogeneous(lambda), out.window);

    std::optional<Rational> c;
    for (Eigen::Index i = 0; i < pivot.rows(); ++i) {
      for (Eigen::Index j = 0; j < pivot.cols(); ++j) {
        if (pivot(i, j) == 0) continue;
        Rational ratio = residual(i, j) / pivot(i, j);
        if (!c || ratio < *c) c = ratio;
      }
    }
    if (!c || *c <= 0) {
      throw NotDecomposableWithinScope("greedy coefficient for S_" + lambda.str() + " is zero", out);
    }
    residual -= *c * pivot;
    out.terms.push_back({*c, lambda});
    if (!is_chain(out.terms)) {
      throw NotDecomposableWithinScope("partitions do not form a chain", out);
    }
  }
  out.chain_certified = is_chain(out.terms);
  if (!is_zero(residual)) {
    throw NotDecomposableWithinScope(
        "residual nonzero after " + std::to_string(kDecompositionIterationCap) + " steps", out);
  }

  // Re-check on a window wide enough for every recovered partition, and
  // compare Hilbert polynomials when the input has one.
  long widest = 0;
  for (const auto& term : out.terms) {
    widest = std::max({widest, std::abs(term.lambda.largest()), std::abs(term.lambda.smallest())});
  }
  const CohomologyTable rebuilt = recompose(out);
  if (t.certified()) {
    out.window = {std::min(out.window.lo, -widest - n - 2), std::max(out.window.hi, widest + n + 2)};
    out.residual_zero = window_values(t, out.window) == window_values(rebuilt, out.window) &&
                        hilbert_polynomial(t) == hilbert_polynomial(rebuilt);
  } else {
    out.residual_zero = window_values(t, out.window) == window_values(rebuilt, out.window);
  }
  if (!out.residual_zero) {
    throw NotDecomposableWithinScope("recomposed table differs from the input", out);
  }
  return out;
}

CohomologyTable recompose(const Decomposition& d) {
  std::vector<HomogeneousTerm> terms;
  for (const auto& term : d.terms) terms.emplace_back(term.coefficient, term.lambda);
  return CohomologyTable::bott_sum(d.n, std::move(terms));
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& term : d.terms) {
    out.push_back({{"coeff", to_string(term.coefficient)}, {"lambda", term.lambda.str()}});
  }
  return out;
}

}  // namespace river
