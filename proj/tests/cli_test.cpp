#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = river::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RIVER_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("table") {
  Result r = run({"table", "push(4,1,-1) on P3", "--window", "-4:3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "3: 70 24  .  . .  .  .   .\n"
        "2:  .  .  8  6 .  .  .   .\n"
        "1:  .  .  .  . 4  .  .   .\n"
        "0:  .  .  .  . . 18 56 120\n"
        "   -4 -3 -2 -1 0  1  2   3\n");
  r = run({"table", "O(0) on P1", "--window=-1:0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.json()["rows"] == nlohmann::json::parse("[[1,0],[0,1]]"));
  r = run({"table", data("gamma.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("4: 56 15") == 0);
  CHECK(run({"table", "O(0) on P1"}).code == 2);
  CHECK(run({"table", data("gamma.txt"), "--window", "-3:3"}).code == 3);
  CHECK(run({"table", "S[1,0", "--window", "0:1"}).code == 2);
  CHECK(run({"table", "O(0) on P1", "--window", "0:1", "--format", "xml"}).code == 2);
}

TEST_CASE("indices") {
  Result r = run({"indices", data("hm.table.json")});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["reg"][1]["value"] == 1);
  CHECK(j["coreg"][0]["value"] == -5);
  CHECK(j["window_limited"] == false);
  r = run({"indices", data("hm.txt")});
  CHECK(r.json()["reg"][1]["value"] == 1);
  r = run({"indices", "O(0) on P2"});
  CHECK(r.json()["reg"][0]["value"] == 0);
}

TEST_CASE("indices flag window-limited values") {
  const std::string path = "cli_test_limited.txt";
  {
    std::ofstream f(path);
    f << "1: . 1 1\n0: . . .\n   0 1 2\n";
  }
  Result r = run({"indices", path});
  CHECK(r.code == 3);
  CHECK(r.json()["reg"][0]["window_limited"] == true);
  std::remove(path.c_str());
}

TEST_CASE("tensor") {
  Result r = run({"tensor", "S[1,0]", "S[1,0]", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.json()["n"] == 2);
  r = run({"tensor", "push(1,0)", "S[1,0]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("literal") != std::string::npos);
}

TEST_CASE("check-bounds") {
  Result r = run({"check-bounds", "push(4,1,-1)", "push(3,-1,-2)", data("fg.txt")});
  CHECK(r.code == 0);
  CHECK(r.json()["reg"]["all_equal"] == true);
  CHECK(r.json()["coreg"]["all_equal"] == true);
  r = run({"check-bounds", "S[1,0]", "S[1,0]", "twist(S[2,0] (+) S[1,1], -1)"});
  CHECK(r.code == 1);
  CHECK(r.json()["reg"]["certified_violation"] == true);
}

TEST_CASE("check-sharpness") {
  Result r = run({"check-sharpness", "1,0", "1,0", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["all_equal"] == true);
  CHECK(r.json()["witnesses"][1]["nu"] == "1,1");
  CHECK(run({"check-sharpness", "1,0", "1,0", "--n", "3"}).code == 2);
  CHECK(run({"check-sharpness", "1,0", "1,0"}).code == 2);
}

TEST_CASE("decompose") {
  Result r = run({"decompose", "O(0) (+) S[1,0] on P2"});
  CHECK(r.code == 0);
  CHECK(r.json()["terms"] == nlohmann::json::parse(R"([{"coeff":"1","lambda":"0,0"},{"coeff":"1","lambda":"1,0"}])"));
  CHECK(r.json()["residual_zero"] == true);
  r = run({"decompose", "O(-1) on P2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("reg^0") != std::string::npos);
}

TEST_CASE("unobstructed") {
  CHECK(run({"unobstructed", "O(0) on P3"}).code == 0);
  Result r = run({"unobstructed", data("hm.txt")});
  CHECK(r.code == 1);
  CHECK(r.json()["reg0_minus_coreg1"] == 6);
  r = run({"unobstructed", data("gamma.txt")});
  CHECK(r.code == 0);
  CHECK(r.json()["reg1_minus_coreg0"] == 3);
}

TEST_CASE("wedge-kernel") {
  Result r = run({"wedge-kernel", "--eta1", R"([[[1,2],"1"]])", "--eta2", R"([[[1,2],"1"]])"});
  CHECK(r.code == 0);
  CHECK(r.json()["kernel_dim"] == 7);

  r = run({"wedge-kernel", "--trials", "20", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.json()["seed"] == 5);
  CHECK(r.json()["min"].get<int>() >= 1);
  CHECK(run({"wedge-kernel", "--trials", "20", "--seed", "5"}).out == r.out);

  ::setenv("RIVER_BANKS_SEED", "5", 1);
  CHECK(run({"wedge-kernel", "--trials", "20"}).out == r.out);
  ::unsetenv("RIVER_BANKS_SEED");
  CHECK(run({"wedge-kernel", "--trials", "3"}).json()["seed"] == river::cli::kDefaultSeed);

  CHECK(run({"wedge-kernel", "--eta1", R"([[[1,2],"1"]])"}).code == 2);
  CHECK(run({"wedge-kernel", "--eta1", "[[", "--eta2", "[]"}).code == 2);
}

TEST_CASE("golden verify") {
  Result r = run({"golden", "verify"});
  CHECK(r.code == 0);
  CHECK(r.json()["failed"] == 0);
  CHECK(run({"golden", "verify"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"golden"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
