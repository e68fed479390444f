#pragma once

// Slow, independent reference computations. None of these call the library
// routine they are used to check.

#include "river/partitions.hpp"
#include "river/table.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using river::Integer;
using river::Rational;

inline Integer binomial(long top, long k) {
  if (k < 0 || top < k || top < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

// Hook-content formula: dim of the GL_N representation with highest weight
// lambda (largest first, any sign).
inline Integer hook_content_dim(std::vector<long> lambda) {
  const long shift = lambda.back();
  for (auto& x : lambda) x -= shift;
  const long N = static_cast<long>(lambda.size());
  Integer num = 1, den = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (long c = 0; c < lambda[r]; ++c) {
      long below = 0;
      for (std::size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++below;
      const long hook = (lambda[r] - c - 1) + below + 1;
      num *= N + c - static_cast<long>(r);
      den *= hook;
    }
  }
  return num / den;
}

// Semistandard tableaux of shape lambda (nonnegative, largest first) with
// entries 1..N, each visited as a row-major vector of entries.
template <class F>
void for_each_ssyt(const std::vector<long>& lambda, int N, F&& visit) {
  std::vector<std::vector<int>> t;
  for (long len : lambda) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(lambda[r]); ++c) cells.emplace_back(r, c);
  }
  auto rec = [&](auto& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      visit(t);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= N; ++v) {
      t[r][c] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

inline Integer ssyt_count(std::vector<long> lambda) {
  const long shift = lambda.back();
  for (auto& x : lambda) x -= shift;
  Integer count = 0;
  for_each_ssyt(lambda, static_cast<int>(lambda.size()), [&](const auto&) { ++count; });
  return count;
}

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Integer>;

// Schur polynomial s_lambda(x_1..x_N) as a sum over tableaux.
inline Poly schur_poly(const std::vector<long>& lambda, int N) {
  Poly p;
  for_each_ssyt(lambda, N, [&](const std::vector<std::vector<int>>& t) {
    Monomial m(static_cast<std::size_t>(N), 0);
    for (const auto& row : t) {
      for (int v : row) ++m[static_cast<std::size_t>(v - 1)];
    }
    p[m] += 1;
  });
  return p;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Littlewood-Richardson expansion by peeling off the lexicographically
// largest monomial of s_lambda * s_mu, which is always a dominant weight.
inline std::map<std::vector<long>, Integer> lr_by_characters(std::vector<long> lambda, std::vector<long> mu) {
  const int N = static_cast<int>(lambda.size());
  const long sl = lambda.back(), sm = mu.back();
  for (auto& x : lambda) x -= sl;
  for (auto& x : mu) x -= sm;
  Poly prod = multiply(schur_poly(lambda, N), schur_poly(mu, N));
  std::map<std::vector<long>, Integer> out;
  while (!prod.empty()) {
    const auto& [top, c] = *prod.rbegin();
    std::vector<long> nu(top.begin(), top.end());
    const Integer coeff = c;
    Poly s = schur_poly(nu, N);
    for (const auto& [m, v] : s) {
      prod[m] -= coeff * v;
      if (prod[m] == 0) prod.erase(m);
    }
    for (auto& x : nu) x += sl + sm;
    out[nu] = coeff;
  }
  return out;
}

// Bott's formula for the twisted cotangent sheaves Omega^p(d) on P^n.
inline Integer omega_cohomology(int n, int p, int q, long d) {
  if (q == 0 && d > p) return binomial(d + n - p, d) * binomial(d - 1, p);
  if (q == n && d < p - n) return binomial(-d + p, -d) * binomial(-d - 1, n - p);
  if (q == p && d == 0) return 1;
  return 0;
}

// h^i((P^1)^m, O(a)) as a sum over all i-subsets.
inline Integer kunneth_subsets(const std::vector<long>& a, int i) {
  const std::size_t m = a.size();
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != i) continue;
    Integer prod = 1;
    for (std::size_t j = 0; j < m; ++j) {
      const long x = a[j];
      prod *= (mask >> j & 1u) ? (x <= -2 ? Integer(-x - 1) : Integer(0)) : (x >= 0 ? Integer(x + 1) : Integer(0));
    }
    total += prod;
  }
  return total;
}

// The display reading of reg^k: the left end of the run of columns, ending
// at hi, whose entries above row k all vanish. Returns hi + 1 if column hi
// itself is bad.
inline long reg_by_scan(const river::CohomologyTable& t, int k, long lo, long hi) {
  long m = hi + 1;
  for (long c = hi; c >= lo; --c) {
    for (int j = k + 1; j <= t.n(); ++j) {
      if (t.entry(j, c - j) != 0) return m;
    }
    m = c;
  }
  return m;
}

// coreg^k: right end of the run of columns, starting at lo, whose entries
// below row n - k all vanish.
inline long coreg_by_scan(const river::CohomologyTable& t, int k, long lo, long hi) {
  long m = lo - 1;
  for (long c = lo; c <= hi; ++c) {
    for (int j = 0; j < t.n() - k; ++j) {
      if (t.entry(j, c - j) != 0) return m;
    }
    m = c;
  }
  return m;
}

// Rank by ordinary Gaussian elimination over the rationals.
inline long rank_gauss(std::vector<std::vector<Rational>> a) {
  long rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t r = static_cast<std::size_t>(rank);
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[static_cast<std::size_t>(rank)]);
    const auto& pivot = a[static_cast<std::size_t>(rank)];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
      const Rational f = a[i][c] / pivot[c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * pivot[j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<long> random_partition(std::mt19937_64& rng, int n, long max_part, long min_part = 0) {
  std::uniform_int_distribution<long> dist(min_part, max_part);
  std::vector<long> parts(static_cast<std::size_t>(n));
  for (auto& x : parts) x = dist(rng);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace oracle

#include "river/kunneth.hpp"

namespace oracle {

// A random table built from generators: sums of homogeneous bundles, Kunneth
// pushforwards, and their duals, twists and direct sums.
inline river::CohomologyTable random_generator_table(std::mt19937_64& rng, int n) {
  using river::CohomologyTable;
  std::uniform_int_distribution<int> pick(0, 9);
  auto leaf = [&]() {
    if (pick(rng) < 6) {
      return CohomologyTable::homogeneous(river::GenPartition(random_partition(rng, n, 4, -2)));
    }
    std::uniform_int_distribution<long> deg(-4, 5);
    std::vector<long> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = deg(rng);
    return river::pushforward_table(a);
  };
  CohomologyTable t = leaf();
  const int shape = pick(rng);
  if (shape >= 5) t = river::add(t, leaf());
  if (shape % 3 == 0) t = river::dual(t);
  if (shape % 4 == 1) t = river::twist(t, static_cast<long>(pick(rng)) - 4);
  if (shape == 9) t = river::scale(t, 2);
  return t;
}

// A random chain lambda^0 < lambda^1 < ... of partitions with parts in
// [0, max_part], so that every table in the chain is 0-regular.
inline std::vector<river::GenPartition> random_chain(std::mt19937_64& rng, int n, int length, long max_part) {
  std::vector<long> parts = random_partition(rng, n, 2);
  std::vector<river::GenPartition> chain{river::GenPartition(parts)};
  while (static_cast<int>(chain.size()) < length) {
    // Grow one part without breaking the ordering; stop on a full box.
    std::vector<std::size_t> growable;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < max_part && (i == 0 || parts[i] < parts[i - 1])) growable.push_back(i);
    }
    if (growable.empty()) break;
    const std::size_t i = growable[rng() % growable.size()];
    parts[i] = std::min(parts[i] + 1 + static_cast<long>(rng() % 2), i == 0 ? max_part : parts[i - 1]);
    chain.emplace_back(parts);
  }
  return chain;
}

}  // namespace oracle
