#pragma once

// Bundle expressions for the command line.
//
//   expr  := sum [ "on" "P<n>" ]
//   sum   := term { "(+)" term }
//   term  := [ INT "*" ] atom
//   atom  := "S[" ints "]"          homogeneous bundle S_lambda(Q), largest part first
//          | "O(" INT ")"           line bundle, = S[t,...,t]
//          | "push(" ints ")"       pi_* O(a_1,...,a_m) from (P^1)^m
//          | "dual(" sum ")"
//          | "twist(" sum "," INT ")"
//          | "(" sum ")"
//
// Whitespace is insignificant. Example: "dual(S[2,1,0]) (+) 2*O(-1) on P3".

#include "river/table.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace river {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  struct Homogeneous {
    std::vector<long> parts;
  };
  struct Line {
    long degree;
  };
  struct Push {
    std::vector<long> degrees;
  };
  struct Dual {
    ExprPtr inner;
  };
  struct Twist {
    ExprPtr inner;
    long shift;
  };
  struct Sum {
    std::vector<ExprPtr> terms;
  };
  struct Scaled {
    Integer factor;
    ExprPtr inner;
  };

  std::variant<Homogeneous, Line, Push, Dual, Twist, Sum, Scaled> node;
  /// The source text this node was parsed from.
  std::string source;
};

struct BundleExpr {
  ExprPtr root;
  std::optional<int> ambient;  // from "on P<n>"
};

/// Throws ParseError with line and column.
BundleExpr parse_expr(std::string_view text);

/// Ambient dimension: the "on" clause, else inferred from S[...] or push(...)
/// lengths. Throws DimensionMismatch naming the offending subterm, or
/// InvalidArgument when nothing fixes the dimension.
int ambient_dimension(const BundleExpr& e);

CohomologyTable evaluate(const BundleExpr& e);

inline CohomologyTable evaluate(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace river
