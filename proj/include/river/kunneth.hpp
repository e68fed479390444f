#pragma once

// Pushforwards of line bundles along the finite map (P^1)^m -> P^m given by
// the elementary symmetric functions. Since the pullback of O(1) is
// O(1, ..., 1), the projection formula gives
//   h^i(P^m, pi_* O(a)(d)) = h^i((P^1)^m, O(a_1 + d, ..., a_m + d)),
// which the Kunneth formula evaluates in closed form.

#include "river/numeric.hpp"
#include "river/table.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace river {

/// h^0(P^1, O(a))
Integer line_h0(long a);
/// h^1(P^1, O(a))
Integer line_h1(long a);

/// h^i((P^1)^m, O(a_1, ..., a_m)): the sum over |S| = i of
/// prod_{j in S} h^1(O(a_j)) * prod_{j not in S} h^0(O(a_j)). Zero for i
/// outside 0..m.
Integer product_line_cohomology(std::span<const long> degrees, int i);

/// The table of pi_* O(a) on P^m, m = degrees.size() >= 1.
CohomologyTable pushforward_table(std::vector<long> degrees);

/// Parses "4,1,-1".
std::vector<long> parse_multidegree(std::string_view text);

}  // namespace river
