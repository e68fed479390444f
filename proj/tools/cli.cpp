#include "cli.hpp"

#include "river/boij_soderberg.hpp"
#include "river/bounds.hpp"
#include "river/error.hpp"
#include "river/exterior.hpp"
#include "river/expr.hpp"
#include "river/golden.hpp"
#include "river/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>

namespace river::cli {

namespace {

using nlohmann::json;

// A file holds a literal table; anything else is a bundle expression.
CohomologyTable load_source(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return load_table_file(source);
  return evaluate(source);
}

json ext_json(const ExtInt& x) {
  if (x.is_finite()) return x.value();
  return x.str();
}

json index_json(int k, const IndexValue& v) {
  return {{"k", k}, {"value", ext_json(v.value)}, {"window_limited", v.window_limited}};
}

json report_json(const BoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"p", e.p},
                       {"bound", ext_json(e.bound)},
                       {"actual", ext_json(e.actual)},
                       {"satisfied", e.satisfied},
                       {"equality", e.equality},
                       {"certified", e.certified}});
  }
  return {{"entries", entries},
          {"all_satisfied", r.all_satisfied()},
          {"all_equal", r.all_equal()},
          {"certified_violation", r.certified_violation()}};
}

json decomposition_json(const Decomposition& d) {
  return {{"n", d.n},
          {"terms", decomposition_to_json(d)},
          {"residual_zero", d.residual_zero},
          {"chain_certified", d.chain_certified},
          {"window", {d.window.lo, d.window.hi}}};
}

void print_table(std::ostream& out, const CohomologyTable& t, ColumnRange window, const std::string& format) {
  if (format == "json") {
    out << table_to_json(t, window).dump() << '\n';
  } else {
    out << render_ascii(t, window);
  }
}

ColumnRange pick_window(const CohomologyTable& t, const std::string& window) {
  if (!window.empty()) return parse_column_range(window);
  if (auto d = t.domain()) return *d;
  throw InvalidArgument("--window lo:hi is required for a generated table");
}

unsigned long long default_seed() {
  if (const char* env = std::getenv("RIVER_BANKS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("RIVER_BANKS_SEED is not a number: ") + env);
    }
  }
  return kDefaultSeed;
}

struct Options {
  std::string source, source2, source3;
  std::string window, format = "ascii";
  std::string lambda, mu;
  int n = 0;
  int trials = 200;
  std::optional<unsigned long long> seed;
  std::string eta1, eta2;
};

int cmd_table(const Options& o, std::ostream& out) {
  const CohomologyTable t = load_source(o.source);
  print_table(out, t, pick_window(t, o.window), o.format);
  return kOk;
}

int cmd_indices(const Options& o, std::ostream& out) {
  const CohomologyTable t = load_source(o.source);
  const RegularityProfile p = regularity_profile(t);
  json reg = json::array(), coreg = json::array();
  for (int k = 0; k < p.n; ++k) {
    reg.push_back(index_json(k, p.reg[static_cast<std::size_t>(k)]));
    coreg.push_back(index_json(k, p.coreg[static_cast<std::size_t>(k)]));
  }
  out << json{{"n", p.n}, {"reg", reg}, {"coreg", coreg}, {"window_limited", p.any_window_limited()}}.dump()
      << '\n';
  return p.any_window_limited() ? kUndecided : kOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const CohomologyTable fg = tensor_homogeneous(load_source(o.source), load_source(o.source2));
  ColumnRange window = o.window.empty() ? fg.support() : parse_column_range(o.window);
  if (window.hi < window.lo) window = {0, 0};
  print_table(out, fg, window, o.format);
  return kOk;
}

int cmd_check_bounds(const Options& o, std::ostream& out) {
  const TensorBoundReports r =
      check_tensor_bounds(load_source(o.source), load_source(o.source2), load_source(o.source3));
  out << json{{"reg", report_json(r.reg)}, {"coreg", report_json(r.coreg)}}.dump() << '\n';
  return r.reg.certified_violation() || r.coreg.certified_violation() ? kViolation : kOk;
}

int cmd_check_sharpness(const Options& o, std::ostream& out) {
  const GenPartition lambda = GenPartition::parse(o.lambda);
  const GenPartition mu = GenPartition::parse(o.mu);
  if (lambda.n() != o.n || mu.n() != o.n) {
    throw DimensionMismatch("partitions must have --n = " + std::to_string(o.n) + " parts");
  }
  const BoundReport r = check_sharpness(lambda, mu);
  json witnesses = json::array();
  for (int p = 0; p < o.n; ++p) witnesses.push_back({{"p", p}, {"nu", lr_witness(lambda, mu, p).str()}});
  json j = report_json(r);
  j["witnesses"] = witnesses;
  out << j.dump() << '\n';
  return r.all_equal() ? kOk : kViolation;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const CohomologyTable t = load_source(o.source);
  try {
    json j = decomposition_json(decompose(t));
    j["complete"] = true;
    out << j.dump() << '\n';
    return kOk;
  } catch (const NotDecomposableWithinScope& e) {
    json j = decomposition_json(e.partial());
    j["complete"] = false;
    j["error"] = e.what();
    out << j.dump() << '\n';
    err << "decompose: " << e.what() << '\n';
    return kViolation;
  } catch (const NotZeroRegular& e) {
    err << "decompose: " << e.what() << '\n';
    return kViolation;
  }
}

int cmd_unobstructed(const Options& o, std::ostream& out) {
  const UnobstructedReport r = unobstructed_criterion(load_source(o.source));
  out << json{{"holds", r.holds},
              {"branch", to_string(r.branch)},
              {"reg0_minus_coreg1", ext_json(r.reg0_minus_coreg1)},
              {"reg1_minus_coreg0", ext_json(r.reg1_minus_coreg0)},
              {"window_limited", r.window_limited}}
             .dump()
      << '\n';
  if (r.window_limited) return kUndecided;
  return r.holds ? kOk : kViolation;
}

TwoForm two_form_arg(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("2-form is not JSON: ") + e.what());
  }
  return two_form_from_json(j);
}

int cmd_wedge_kernel(const Options& o, std::ostream& out) {
  if (!o.eta1.empty() || !o.eta2.empty()) {
    if (o.eta1.empty() || o.eta2.empty()) throw InvalidArgument("--eta1 and --eta2 go together");
    const int k = kernel_dim(two_form_arg(o.eta1), two_form_arg(o.eta2));
    out << json{{"kernel_dim", k}, {"rank", 10 - k}}.dump() << '\n';
    return k >= 1 ? kOk : kViolation;
  }
  if (o.trials < 1) throw InvalidArgument("--trials must be positive");
  const unsigned long long seed = o.seed ? *o.seed : default_seed();
  std::mt19937_64 rng(seed);
  std::vector<int> dims;
  for (int t = 0; t < o.trials; ++t) {
    const TwoForm eta1 = random_two_form(rng);
    const TwoForm eta2 = random_two_form(rng);
    dims.push_back(kernel_dim(eta1, eta2));
  }
  const int lowest = *std::min_element(dims.begin(), dims.end());
  out << json{{"seed", seed}, {"trials", o.trials}, {"kernel_dims", dims}, {"min", lowest}}.dump() << '\n';
  return lowest >= 1 ? kOk : kViolation;
}

int cmd_golden_verify(std::ostream& out) {
  json checks = json::array();
  int failed = 0;
  for (const auto& c : verify_golden()) {
    json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      j["detail"] = c.detail;
      ++failed;
    }
    checks.push_back(j);
  }
  out << json{{"checks", checks}, {"failed", failed}, {"total", checks.size()}}.dump() << '\n';
  return failed == 0 ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology tables of vector bundles on projective space", "river-banks"};
  app.require_subcommand(1);
  Options o;
  const std::string source_help = "bundle expression, or a file holding a table (ASCII or JSON)";

  auto* table = app.add_subcommand("table", "render a table");
  table->add_option("source", o.source, source_help)->required();
  table->add_option("--window", o.window, "display columns lo:hi");
  table->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "json"}));

  auto* indices = app.add_subcommand("indices", "regularity and coregularity indices");
  indices->add_option("source", o.source, source_help)->required();

  auto* tensor = app.add_subcommand("tensor", "table of F ⊗ G for sums of homogeneous bundles");
  tensor->add_option("F", o.source)->required();
  tensor->add_option("G", o.source2)->required();
  tensor->add_option("--window", o.window, "display columns lo:hi");
  tensor->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "json"}));

  auto* bounds = app.add_subcommand("check-bounds", "check the tensor product bounds against a table of F ⊗ G");
  bounds->add_option("F", o.source)->required();
  bounds->add_option("G", o.source2)->required();
  bounds->add_option("FG", o.source3)->required();

  auto* sharp = app.add_subcommand("check-sharpness", "compare reg of S_lambda ⊗ S_mu with the bound");
  sharp->add_option("lambda", o.lambda)->required();
  sharp->add_option("mu", o.mu)->required();
  sharp->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* decomp = app.add_subcommand("decompose", "chain decomposition of a 0-regular table");
  decomp->add_option("source", o.source, source_help)->required();

  auto* unob = app.add_subcommand("unobstructed", "cohomological criterion for Ext^2(F, F) = 0");
  unob->add_option("source", o.source, source_help)->required();

  auto* wedge = app.add_subcommand("wedge-kernel", "kernel of omega -> (omega∧eta1, omega∧eta2)");
  wedge->add_option("--trials", o.trials, "random pairs to test");
  wedge->add_option("--seed", o.seed, "defaults to $RIVER_BANKS_SEED, then " + std::to_string(kDefaultSeed));
  wedge->add_option("--eta1", o.eta1, "JSON [[[i, j], \"p/q\"], ...]");
  wedge->add_option("--eta2", o.eta2);

  auto* golden = app.add_subcommand("golden", "reference tables");
  golden->require_subcommand(1);
  auto* verify = golden->add_subcommand("verify", "re-check every reference table and value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return cmd_table(o, out);
    if (*indices) return cmd_indices(o, out);
    if (*tensor) return cmd_tensor(o, out);
    if (*bounds) return cmd_check_bounds(o, out);
    if (*sharp) return cmd_check_sharpness(o, out);
    if (*decomp) return cmd_decompose(o, out, err);
    if (*unob) return cmd_unobstructed(o, out);
    if (*wedge) return cmd_wedge_kernel(o, out);
    if (*verify) return cmd_golden_verify(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const WindowExceeded& e) {
    err << "window exceeded: " << e.what() << '\n';
    return kUndecided;
  } catch (const Undecidable& e) {
    err << "undecidable: " << e.what() << '\n';
    return kUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace river::cli
