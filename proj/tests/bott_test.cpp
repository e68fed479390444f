#include "oracles.hpp"
#include "river/bott.hpp"
#include "river/error.hpp"

#include <doctest.h>

using namespace river;

namespace {

// Omega^q on P^n is Lambda^{n-q} Q twisted by -(q+1).
GenPartition omega_partition(int n, int q) {
  std::vector<long> parts(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n - q; ++k) parts[static_cast<std::size_t>(k)] = 1;
  return GenPartition(parts).shifted(-(q + 1));
}

}  // namespace

TEST_CASE("line bundles") {
  for (int n = 1; n <= 5; ++n) {
    const GenPartition o = GenPartition::zero(n);
    for (long d = -12; d <= 12; ++d) {
      CHECK(bott_entry(o, 0, d) == oracle::binomial(n + d, n));
      CHECK(bott_entry(o, n, d) == oracle::binomial(-d - 1, n));
      for (int i = 1; i < n; ++i) CHECK(bott_entry(o, i, d) == 0);
    }
    CHECK(bott_cohomology(o, -n - 1) == BottCell{n, 1});
    for (long d = -n; d <= -1; ++d) CHECK_FALSE(bott_cohomology(o, d).has_value());
  }
}

TEST_CASE("twisted cotangent sheaves follow Bott's formula") {
  for (int n = 1; n <= 5; ++n) {
    for (int q = 0; q <= n; ++q) {
      const GenPartition lambda = omega_partition(n, q);
      for (long d = -10; d <= 10; ++d) {
        for (int i = 0; i <= n; ++i) {
          INFO("n=" << n << " Omega^" << q << "(" << d << ") h^" << i);
          CHECK(bott_entry(lambda, i, d) == oracle::omega_cohomology(n, q, i, d));
        }
      }
    }
  }
  CHECK(bott_entry(omega_partition(2, 1), 1, 0) == 1);
}

TEST_CASE("worked cases") {
  CHECK(bott_cohomology(GenPartition{1, 0}, 0) == BottCell{0, 3});
  // Q = Omega^1(2) on P^2.
  CHECK_FALSE(bott_cohomology(GenPartition{1, 0}, -1).has_value());
  CHECK(bott_cohomology(GenPartition{1, 0}, -2) == BottCell{1, 1});
  CHECK(bott_cohomology(GenPartition{1, 0}, -4) == BottCell{2, 3});
  CHECK(bott_entry(GenPartition{1, 0}, 0, -2) == 0);
  CHECK(bott_entry(GenPartition{1, 0}, 5, 3) == 0);
  CHECK(bott_entry(GenPartition{1, 0}, -1, 3) == 0);
}

TEST_CASE("at most one nonzero degree and only the inversion count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const GenPartition lambda(oracle::random_partition(rng, n, 4, -4));
    const long d = static_cast<long>(rng() % 21) - 10;
    int nonzero = 0;
    for (int i = 0; i <= n; ++i) nonzero += bott_entry(lambda, i, d) != 0;
    CHECK(nonzero <= 1);
  }
}

TEST_CASE("regularity of homogeneous bundles") {
  CHECK(homogeneous_reg(GenPartition{1, 0}, 1) == -1);
  CHECK(homogeneous_reg(GenPartition{1, 0}, 0) == 0);
  // lambda_3 of (7,5,2,2,0,0) is 2.
  CHECK(homogeneous_reg(GenPartition{7, 5, 2, 2, 0, 0}, 3) == -2);
  CHECK_THROWS_AS(homogeneous_reg(GenPartition{1, 0}, 2), InvalidArgument);
  CHECK_THROWS_AS(homogeneous_reg(GenPartition{1, 0}, -1), InvalidArgument);
}

TEST_CASE("Euler characteristic polynomial") {
  for (int n = 1; n <= 4; ++n) {
    std::mt19937_64 rng(static_cast<unsigned long>(n));
    for (int trial = 0; trial < 20; ++trial) {
      const GenPartition lambda(oracle::random_partition(rng, n, 4, -3));
      const Polynomial chi = chi_polynomial(lambda);
      CHECK(chi.degree() == n);
      for (long d = -12; d <= 12; ++d) {
        Integer alt = 0;
        for (int i = 0; i <= n; ++i) alt += (i % 2 ? -1 : 1) * bott_entry(lambda, i, d);
        CHECK(chi(Rational(d)) == Rational(alt));
      }
      std::vector<Integer> roots;
      for (int k = n - 1; k >= 0; --k) roots.emplace_back(-(lambda.part(k) + k + 1));
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      CHECK(chi.integer_roots() == roots);
    }
  }
}
