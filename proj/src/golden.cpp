#include "river/golden.hpp"

#include "river/bott.hpp"
#include "river/bounds.hpp"
#include "river/error.hpp"
#include "river/kunneth.hpp"
#include "river/table_io.hpp"

#include <sstream>

namespace river {

namespace {

constexpr std::string_view kHM = R"(4: 100 35  4  .  . . .  .  .  .   .
3:   .  2 10 10  5 . .  .  .  .   .
2:   .  .  .  .  . 2 .  .  .  .   .
1:   .  .  .  .  . . 5 10 10  2   .
0:   .  .  .  .  . . .  .  4 35 100
    -5 -4 -3 -2 -1 0 1  2  3  4   5
)";

constexpr std::string_view kF = R"(3: 70 24  .  . .  .  .   .
2:  .  .  8  6 .  .  .   .
1:  .  .  .  . 4  .  .   .
0:  .  .  .  . . 18 56 120
   -4 -3 -2 -1 0  1  2   3
)";

constexpr std::string_view kG = R"(3: 168 84 30  .  . .  .  .
2:   .  .  . 12 12 6  .  .
1:   .  .  .  .  . .  .  .
0:   .  .  .  .  . . 12 42
    -4 -3 -2 -1  0 1  2  3
)";

constexpr std::string_view kFG = R"(3: 624 216  72   8  .  .  .   .
2:   .  96 140 144 96 42  .   .
1:   .   .   .   . 18 36 48   .
0:   .   .   .   .  .  . 24 216
    -4  -3  -2  -1  0  1  2   3
)";

constexpr std::string_view kGamma = R"(4: 56 15 . . .  .
3:  .  . 2 . .  .
2:  .  . . 1 .  .
1:  .  . . . .  .
0:  .  . . . 8 35
   -2 -1 0 1 2  3
)";

class Checker {
 public:
  template <class A, class E>
  void expect(const std::string& name, const A& actual, const E& expected) {
    bool ok = actual == expected;
    std::string detail;
    if (!ok) detail = "expected " + show(expected) + ", got " + show(actual);
    out_.push_back({name, ok, detail});
  }

  // Runs f, recording any exception as a failure of `name`.
  template <class F>
  void guard(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out_.push_back({name, false, e.what()});
    }
  }

  std::vector<GoldenCheck> take() { return std::move(out_); }

 private:
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>) {
      os << (v ? "true" : "false");
    } else if constexpr (requires { v.str(); }) {
      os << v.str();
    } else if constexpr (requires { os << v; }) {
      os << v;
    } else {
      os << "<value>";
    }
    return os.str();
  }

  std::vector<GoldenCheck> out_;
};

std::vector<long> finite_values(const std::vector<IndexValue>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.value.is_finite() ? x.value.value() : 0);
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

bool any_limited(const std::vector<IndexValue>& v) {
  for (const auto& x : v) {
    if (x.window_limited) return true;
  }
  return false;
}

}  // namespace

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables{
      {"hm", kHM}, {"f", kF}, {"g", kG}, {"fg", kFG}, {"gamma", kGamma},
  };
  return tables;
}

CohomologyTable golden_table(std::string_view name) {
  for (const auto& t : golden_tables()) {
    if (t.name == name) return parse_ascii(t.ascii);
  }
  throw InvalidArgument("no reference table named '" + std::string(name) + "'");
}

std::vector<GoldenCheck> verify_golden() {
  Checker c;

  for (const auto& g : golden_tables()) {
    const std::string name(g.name);
    c.guard("roundtrip:" + name, [&] {
      const CohomologyTable t = parse_ascii(g.ascii);
      c.expect("roundtrip:" + name, normalize_whitespace(render_ascii(t, *t.domain())),
               normalize_whitespace(g.ascii));
    });
  }

  // Tables with a generator are re-derived, not only parsed.
  const std::vector<std::pair<std::string, std::vector<long>>> derived{{"f", {4, 1, -1}}, {"g", {3, -1, -2}}};
  for (const auto& [name, degrees] : derived) {
    c.guard("kunneth:" + name, [&] {
      const CohomologyTable lit = golden_table(name);
      const CohomologyTable gen = pushforward_table(degrees);
      c.expect("kunneth:" + name, window_values(gen, *lit.domain()) == window_values(lit, *lit.domain()), true);
    });
  }
  c.guard("kunneth:cells", [&] {
    const std::vector<long> a{-3, -6, -8}, b{5, 2, 0}, e{0, -4, -5};
    c.expect("kunneth:cell(-3,-6,-8;3)", product_line_cohomology(a, 3), Integer(70));
    c.expect("kunneth:cell(5,2,0;0)", product_line_cohomology(b, 0), Integer(18));
    c.expect("kunneth:cell(0,-4,-5;2)", product_line_cohomology(e, 2), Integer(12));
  });

  c.guard("hm", [&] {
    const CohomologyTable hm = golden_table("hm");
    c.expect("hm:entry(2,-2)", hm.entry(2, -2), Integer(2));
    c.expect("hm:entry(4,-9)", hm.entry(4, -9), Integer(100));
    c.expect("hm:reg1", reg(hm, 1), IndexValue{ExtInt(1), false});
    c.expect("hm:coreg0", coreg(hm, 0), IndexValue{ExtInt(-5), false});
    c.expect("hm:natural", is_natural(hm), false);
    c.expect("hm:beilinson(0)", beilinson_terms(hm, 0) == std::vector<BeilinsonTerm>{{2, Integer(2)}}, true);
    const UnobstructedReport u = unobstructed_criterion(hm);
    c.expect("hm:unobstructed", u.holds, false);
    c.expect("hm:margins", join({u.reg0_minus_coreg1.value(), u.reg1_minus_coreg0.value()}), std::string("6,6"));
    for (int k = 0; k < hm.n(); ++k) {
      c.expect("hm:coreg-identity(" + std::to_string(k) + ")", coreg(hm, k).value,
               -reg(dual(hm), k).value - ExtInt(1));
    }
  });

  c.guard("example", [&] {
    const CohomologyTable f = golden_table("f");
    const CohomologyTable g = golden_table("g");
    const CohomologyTable fg = golden_table("fg");
    const RegularityProfile pf = regularity_profile(f);
    const RegularityProfile pg = regularity_profile(g);
    const RegularityProfile pfg = regularity_profile(fg);
    c.expect("f:reg", join(finite_values(pf.reg)), std::string("1,0,-2"));
    c.expect("f:coreg", join(finite_values(pf.coreg)), std::string("-3,-1,0"));
    c.expect("g:reg", join(finite_values(pg.reg)), std::string("2,2,-1"));
    c.expect("g:coreg", join(finite_values(pg.coreg)), std::string("-2,1,1"));
    c.expect("fg:reg", join(finite_values(pfg.reg)), std::string("3,2,0"));
    c.expect("fg:coreg", join(finite_values(pfg.coreg)), std::string("-4,-1,1"));
    c.expect("f,g,fg:window-limited",
             any_limited(pf.reg) || any_limited(pf.coreg) || any_limited(pg.reg) || any_limited(pg.coreg) ||
                 any_limited(pfg.reg) || any_limited(pfg.coreg),
             false);
    const TensorBoundReports r =
        check_tensor_bounds(pushforward_table({4, 1, -1}), pushforward_table({3, -1, -2}), fg);
    c.expect("bounds:reg-hold", r.reg.all_satisfied(), true);
    c.expect("bounds:reg-equal", r.reg.all_equal(), true);
    c.expect("bounds:coreg-hold", r.coreg.all_satisfied(), true);
    c.expect("bounds:coreg-equal", r.coreg.all_equal(), true);
  });

  c.guard("gamma", [&] {
    const CohomologyTable gamma = golden_table("gamma");
    c.expect("gamma:natural", is_natural(gamma), true);
    c.expect("gamma:reg1", reg(gamma, 1).value, ExtInt(2));
    c.expect("gamma:coreg0", coreg(gamma, 0).value, ExtInt(-1));
    const UnobstructedReport u = unobstructed_criterion(gamma);
    c.expect("gamma:unobstructed", u.holds, true);
    c.expect("gamma:margin", u.reg1_minus_coreg0, ExtInt(3));
    c.expect("gamma:beilinson(1)", beilinson_terms(gamma, 1) == std::vector<BeilinsonTerm>{{2, Integer(1)}}, true);
  });

  c.guard("bott", [&] {
    c.expect("bott:reg(1,0;1)", homogeneous_reg(GenPartition{1, 0}, 1), -1L);
    // lambda_3 of (7,5,2,2,0,0) is 2.
    c.expect("bott:reg(7,5,2,2,0,0;3)", homogeneous_reg(GenPartition{7, 5, 2, 2, 0, 0}, 3), -2L);
    const GenPartition lambda{4, 1, 1, 0};
    const CohomologyTable t = CohomologyTable::homogeneous(lambda);
    for (int k = 0; k < lambda.n(); ++k) {
      c.expect("bott:reg(4,1,1,0;" + std::to_string(k) + ")", reg(t, k).value, ExtInt(-lambda.part(k)));
    }
  });

  return c.take();
}

}  // namespace river
