#include "oracles.hpp"
#include "river/error.hpp"
#include "river/kunneth.hpp"

#include <doctest.h>

using namespace river;

TEST_CASE("line bundles on P^1") {
  CHECK(line_h0(3) == 4);
  CHECK(line_h0(-1) == 0);
  CHECK(line_h1(-1) == 0);
  CHECK(line_h1(-2) == 1);
  CHECK(line_h1(-5) == 4);
  CHECK(line_h1(0) == 0);
}

TEST_CASE("product cells") {
  const std::vector<long> a{-3, -6, -8}, b{5, 2, 0}, c{0, -4, -5};
  CHECK(product_line_cohomology(a, 3) == 70);
  CHECK(product_line_cohomology(b, 0) == 18);
  CHECK(product_line_cohomology(c, 2) == 12);
  CHECK(product_line_cohomology(b, 4) == 0);
  CHECK(product_line_cohomology(b, -1) == 0);
}

TEST_CASE("product cells agree with the subset sum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> deg(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> a(1 + rng() % 5);
    for (auto& x : a) x = deg(rng);
    for (int i = 0; i <= static_cast<int>(a.size()); ++i) {
      CHECK(product_line_cohomology(a, i) == oracle::kunneth_subsets(a, i));
    }
  }
}

TEST_CASE("pushforward tables reproduce the reference blocks") {
  const CohomologyTable f = pushforward_table({4, 1, -1});
  CHECK(f.n() == 3);
  CHECK(f.entry(3, -7) == 70);
  CHECK(f.entry(3, -6) == 24);
  CHECK(f.entry(2, -4) == 8);
  CHECK(f.entry(2, -3) == 6);
  CHECK(f.entry(1, -1) == 4);
  CHECK(f.entry(0, 1) == 18);
  CHECK(f.entry(0, 2) == 56);
  CHECK(f.entry(0, 3) == 120);
  const CohomologyTable g = pushforward_table({3, -1, -2});
  CHECK(g.entry(3, -7) == 168);
  CHECK(g.entry(2, -3) == 12);
  CHECK(g.entry(0, 3) == 42);
}

TEST_CASE("multidegree parsing") {
  CHECK(parse_multidegree("4,1,-1") == std::vector<long>{4, 1, -1});
  CHECK(parse_multidegree(" 3 , -1 ") == std::vector<long>{3, -1});
  CHECK_THROWS(parse_multidegree("4,,1"));
  CHECK_THROWS(parse_multidegree(""));
  CHECK_THROWS_AS(pushforward_table({}), InvalidArgument);
}
