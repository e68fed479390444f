#include "oracles.hpp"
#include "river/error.hpp"
#include "river/golden.hpp"
#include "river/kunneth.hpp"
#include "river/table_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace river;

TEST_CASE("render the structure sheaf of P^1") {
  const CohomologyTable o = CohomologyTable::homogeneous(GenPartition::zero(1));
  CHECK(render_ascii(o, {-2, 1}) ==
        "1:  2  1 . .\n"
        "0:  .  . 1 2\n"
        "   -2 -1 0 1\n");
}

TEST_CASE("render reproduces a reference block character for character") {
  const auto& tables = golden_tables();
  const auto f = std::find_if(tables.begin(), tables.end(), [](const GoldenTable& g) { return g.name == "f"; });
  CHECK(render_ascii(pushforward_table({4, 1, -1}), {-4, 3}) == f->ascii);
}

TEST_CASE("every reference block round-trips") {
  for (const auto& g : golden_tables()) {
    INFO(g.name);
    const CohomologyTable t = parse_ascii(g.ascii);
    CHECK(t.backend() == CohomologyTable::Backend::Literal);
    CHECK(normalize_whitespace(render_ascii(t, *t.domain())) == normalize_whitespace(g.ascii));
    const CohomologyTable again = parse_ascii(render_ascii(t, *t.domain()));
    CHECK(window_values(again, *t.domain()) == window_values(t, *t.domain()));
    const CohomologyTable from_json = table_from_json(table_to_json(t, *t.domain()));
    CHECK(window_values(from_json, *t.domain()) == window_values(t, *t.domain()));
  }
}

TEST_CASE("data files hold the reference blocks") {
  for (const auto& g : golden_tables()) {
    std::ifstream in(std::string(RIVER_DATA_DIR) + "/" + std::string(g.name) + ".txt");
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == g.ascii);
  }
  const CohomologyTable hm = load_table_file(std::string(RIVER_DATA_DIR) + "/hm.table.json");
  CHECK(hm.entry(4, -9) == 100);
  CHECK(*hm.domain() == ColumnRange{-5, 5});
}

TEST_CASE("parser tolerates spacing only") {
  const CohomologyTable t = parse_ascii("  1:   2 1   . .\n\n0: . . 1    2\n  -2 -1 0 1  \n");
  CHECK(t.n() == 1);
  CHECK(t.entry(1, -3) == 2);
  CHECK(t.entry(0, 1) == 2);
}

TEST_CASE("parser errors") {
  auto error_line = [](std::string_view text) {
    try {
      parse_ascii(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(error_line("1: 2 1 .\n0: . . 1 2\n-2 -1 0 1\n") == 1);        // ragged
  CHECK(error_line("1: 2 -1 . .\n0: . . 1 2\n-2 -1 0 1\n") == 1);     // negative entry
  CHECK(error_line("1: 2 1 . .\n0: . . 1 2\n") > 0);                  // missing index line
  CHECK(error_line("1: 2 1 . .\n1: . . 1 2\n-2 -1 0 1\n") == 2);      // row labels
  CHECK(error_line("1: 2 1 . .\n0: . . 1 2\n-2 -1 1 2\n") == 3);      // column labels
  CHECK(error_line("1: 2 x . .\n0: . . 1 2\n-2 -1 0 1\n") == 1);      // junk
  CHECK(error_line("2: 2 1 . .\n0: . . 1 2\n-2 -1 0 1\n") == 1);      // two rows make P^1
  CHECK_THROWS_AS(parse_ascii(""), ParseError);
}

TEST_CASE("JSON format") {
  const CohomologyTable o = CohomologyTable::homogeneous(GenPartition::zero(1));
  const nlohmann::json j = table_to_json(o, {-2, 1});
  CHECK(j.dump() == R"({"n":1,"rows":[[2,1,0,0],[0,0,1,2]],"window":[-2,1]})");

  // Entries beyond 64 bits travel as strings.
  const CohomologyTable big = CohomologyTable::homogeneous(GenPartition::zero(12));
  const nlohmann::json jb = table_to_json(big, {400, 400});
  CHECK(jb["rows"][12][0].is_string());
  CHECK(table_from_json(jb).entry(0, 400) == big.entry(0, 400));

  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"n":1,"window":[0,1],"rows":[[1,2]]})")),
                  ParseError);
  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"n":1,"window":[0,1],"rows":[[1,2],[1,-2]]})")),
                  ParseError);
}

TEST_CASE("render checks the window") {
  CHECK_THROWS_AS(render_ascii(golden_table("f"), {-5, 3}), WindowExceeded);
}
