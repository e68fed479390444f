#include "river/error.hpp"
#include "river/expr.hpp"
#include "river/kunneth.hpp"

#include <doctest.h>

using namespace river;

namespace {

bool same(const CohomologyTable& a, const CohomologyTable& b, ColumnRange w = {-12, 12}) {
  return window_values(a, w) == window_values(b, w);
}

std::pair<int, int> error_position(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("atoms") {
  const BundleExpr e = parse_expr("S[1,0] on P2");
  CHECK(std::holds_alternative<ExprNode::Homogeneous>(e.root->node));
  CHECK(e.ambient == 2);
  CHECK(same(evaluate(e), CohomologyTable::homogeneous(GenPartition{1, 0})));
  CHECK(same(evaluate("push(4,1,-1) on P3"), pushforward_table({4, 1, -1})));
  CHECK(same(evaluate("O(-2) on P3"), CohomologyTable::homogeneous(GenPartition::constant(3, -2))));
  CHECK(same(evaluate("push(4, 1, -1)"), pushforward_table({4, 1, -1})));
}

TEST_CASE("compound expressions") {
  const BundleExpr e = parse_expr("dual(S[2,1,0]) (+) 2*O(-1) on P3");
  CHECK(std::holds_alternative<ExprNode::Sum>(e.root->node));
  const CohomologyTable expected =
      add(dual(CohomologyTable::homogeneous(GenPartition{2, 1, 0})),
          scale(CohomologyTable::homogeneous(GenPartition::constant(3, -1)), 2));
  CHECK(same(evaluate(e), expected));
  CHECK(same(evaluate("twist(S[1,0] (+) O(0), -2)"),
             twist(add(CohomologyTable::homogeneous(GenPartition{1, 0}),
                       CohomologyTable::homogeneous(GenPartition::zero(2))),
                   -2)));
  CHECK(same(evaluate("(O(1)) on P1"), CohomologyTable::homogeneous(GenPartition{1})));
  CHECK(same(evaluate(" \n dual( push(1,0) ) (+)\n push(0,0) "),
             add(dual(pushforward_table({1, 0})), pushforward_table({0, 0}))));
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("S[1,0") == std::pair{1, 6});
  CHECK(error_position("S[1,0] (+)") == std::pair{1, 11});
  CHECK(error_position("S[1,0]\n  foo(1)") == std::pair{2, 3});
  CHECK(error_position("S[0,1]").first == 1);
  CHECK(error_position("0*O(1) on P2") == std::pair{1, 1});
  CHECK(error_position("O(1) on Q2") == std::pair{1, 9});
  CHECK(error_position("O(1) on P0") == std::pair{1, 9});
  CHECK(error_position("S[1,0] $") == std::pair{1, 8});
  CHECK(error_position("twist(O(1) 2)") == std::pair{1, 12});
}

TEST_CASE("dimension errors name the subterm") {
  try {
    evaluate("S[1,0] (+) push(1,2,3)");
    FAIL("no exception");
  } catch (const DimensionMismatch& e) {
    CHECK(std::string(e.what()).find("push(1,2,3)") != std::string::npos);
  }
  try {
    evaluate("S[1,0] on P3");
    FAIL("no exception");
  } catch (const DimensionMismatch& e) {
    CHECK(std::string(e.what()).find("S[1,0]") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate("O(1)"), InvalidArgument);
  CHECK(ambient_dimension(parse_expr("O(1) (+) S[2,1,1]")) == 3);
}
