#pragma once

// Reference tables and the values read off them, kept verbatim so they can be
// re-checked without any data files.
//
//   hm     Horrocks-Mumford bundle on P^4, columns -5..5
//   f      pi_* O(4,1,-1) on P^3, columns -4..3
//   g      pi_* O(3,-1,-2) on P^3, columns -4..3
//   fg     f ⊗ g, columns -4..3
//   gamma  a natural table on P^4 with reg^1 = 2, columns -2..3

#include "river/table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace river {

struct GoldenTable {
  std::string_view name;
  std::string_view ascii;
};

const std::vector<GoldenTable>& golden_tables();

/// The named table as a Literal. Throws InvalidArgument for unknown names.
CohomologyTable golden_table(std::string_view name);

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // expected vs. actual on failure
};

/// Parses every reference table, re-derives the ones that have a generator,
/// and checks every quoted value. Deterministic.
std::vector<GoldenCheck> verify_golden();

}  // namespace river
