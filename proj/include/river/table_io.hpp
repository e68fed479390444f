#pragma once

// Text and JSON forms of cohomology tables.
//
// ASCII form (rows i = n down to 0, zeros as dots, then the display-column
// indices):
//
//   3: 70 24  .  . .  .  .   .
//   2:  .  .  8  6 .  .  .   .
//   1:  .  .  .  . 4  .  .   .
//   0:  .  .  .  . . 18 56 120
//      -4 -3 -2 -1 0  1  2   3
//
// Columns are right-aligned to their widest cell. The parser accepts any
// amount of whitespace between tokens.
//
// JSON form: {"n": 3, "window": [-4, 3], "rows": [[...], ...]} with rows
// listed i = n down to 0 in display-column order; integers that do not fit
// in 64 bits are written as decimal strings.

#include "river/table.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace river {

/// Throws WindowExceeded if the window leaves a literal table's domain.
std::string render_ascii(const CohomologyTable& t, ColumnRange window);
/// Returns a Literal table. Throws ParseError on ragged rows, negative
/// entries, non-consecutive row or column labels, or a missing index line.
CohomologyTable parse_ascii(std::string_view text);

nlohmann::json table_to_json(const CohomologyTable& t, ColumnRange window);
CohomologyTable table_from_json(const nlohmann::json& j);

/// Collapses whitespace runs and trims lines, dropping blank lines.
std::string normalize_whitespace(std::string_view text);

/// JSON number when it fits in int64, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

/// Reads a literal table from a file: JSON when the content starts with '{',
/// ASCII otherwise.
CohomologyTable load_table_file(const std::string& path);

}  // namespace river
