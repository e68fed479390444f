#include "river/bounds.hpp"

#include <algorithm>

namespace river {

bool BoundReport::all_satisfied() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.satisfied; });
}

bool BoundReport::all_equal() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.equality; });
}

bool BoundReport::certified_violation() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const BoundEntry& e) { return e.certified && !e.satisfied; });
}

CohomologyTable tensor_homogeneous(const CohomologyTable& f, const CohomologyTable& g) {
  if (f.n() != g.n()) {
    throw DimensionMismatch("tensor product of tables on P^" + std::to_string(f.n()) + " and P^" +
                            std::to_string(g.n()));
  }
  auto tf = homogeneous_terms(f);
  auto tg = homogeneous_terms(g);
  if (!tf || !tg) {
    throw InvalidArgument(
        "tensor products are computed only for sums of homogeneous bundles; for other bundles "
        "supply the product table as a literal and use check-bounds");
  }
  std::vector<HomogeneousTerm> terms;
  for (const auto& [mf, lambda] : *tf) {
    for (const auto& [mg, mu] : *tg) {
      for (const auto& [nu, c] : lr_expand(lambda, mu)) terms.emplace_back(mf * mg * c, nu);
    }
  }
  return CohomologyTable::bott_sum(f.n(), std::move(terms));
}

TensorBoundReports check_tensor_bounds(const CohomologyTable& f, const CohomologyTable& g,
                                       const CohomologyTable& product_table) {
  const int n = f.n();
  if (g.n() != n || product_table.n() != n) {
    throw DimensionMismatch("check_tensor_bounds needs three tables on the same P^n");
  }
  const RegularityProfile pf = regularity_profile(f);
  const RegularityProfile pg = regularity_profile(g);
  const RegularityProfile pfg = regularity_profile(product_table);

  TensorBoundReports out;
  out.reg.side = BoundReport::Side::Reg;
  out.coreg.side = BoundReport::Side::Coreg;
  for (int p = 0; p < n; ++p) {
    BoundEntry r{.p = p, .bound = ExtInt::pos_infinity(), .actual = pfg.reg[p].value};
    BoundEntry c{.p = p, .bound = ExtInt::neg_infinity(), .actual = pfg.coreg[p].value};
    r.certified = !pfg.reg[p].window_limited;
    c.certified = !pfg.coreg[p].window_limited;
    for (int k = 0; k <= p; ++k) {
      const int l = p - k;
      r.bound = std::min(r.bound, pf.reg[k].value + pg.reg[l].value);
      c.bound = std::max(c.bound, pf.coreg[k].value + pg.coreg[l].value);
      r.certified = r.certified && !pf.reg[k].window_limited && !pg.reg[l].window_limited;
      c.certified = c.certified && !pf.coreg[k].window_limited && !pg.coreg[l].window_limited;
    }
    c.bound = c.bound + ExtInt(1);
    r.satisfied = r.actual <= r.bound;
    r.equality = r.actual == r.bound;
    c.satisfied = c.actual >= c.bound;
    c.equality = c.actual == c.bound;
    out.reg.entries.push_back(r);
    out.coreg.entries.push_back(c);
  }
  return out;
}

BoundReport check_sharpness(const GenPartition& lambda, const GenPartition& mu) {
  const CohomologyTable product =
      tensor_homogeneous(CohomologyTable::homogeneous(lambda), CohomologyTable::homogeneous(mu));
  BoundReport report;
  for (int p = 0; p < lambda.n(); ++p) {
    long best = lambda.part(0) + mu.part(p);
    for (int k = 0; k <= p; ++k) best = std::max(best, lambda.part(k) + mu.part(p - k));
    BoundEntry e{.p = p, .bound = ExtInt(-best), .actual = reg(product, p).value};
    e.satisfied = e.actual <= e.bound;
    e.equality = e.actual == e.bound;
    report.entries.push_back(e);
  }
  return report;
}

GenPartition lr_witness(const GenPartition& lambda, const GenPartition& mu, int p) {
  if (p < 0 || p >= lambda.n()) {
    throw InvalidArgument("lr_witness: p = " + std::to_string(p) + " out of range");
  }
  long bound = lambda.part(0) + mu.part(p);
  for (int k = 0; k <= p; ++k) bound = std::max(bound, lambda.part(k) + mu.part(p - k));
  // lr_expand returns terms in increasing lexicographic order.
  for (const auto& [nu, c] : lr_expand(lambda, mu)) {
    if (nu.part(p) <= bound) return nu;
  }
  throw NoWitness("no term of S_" + lambda.str() + " ⊗ S_" + mu.str() + " has nu_" + std::to_string(p) +
                  " <= " + std::to_string(bound));
}

UnobstructedReport unobstructed_criterion(const CohomologyTable& t) {
  const IndexValue r0 = reg(t, 0);
  const IndexValue r1 = reg(t, 1);
  const IndexValue c0 = coreg(t, 0);
  const IndexValue c1 = coreg(t, 1);

  UnobstructedReport out;
  out.reg0_minus_coreg1 = r0.value - c1.value;
  out.reg1_minus_coreg0 = r1.value - c0.value;
  out.window_limited = r0.window_limited || r1.window_limited || c0.window_limited || c1.window_limited;
  const bool first = out.reg0_minus_coreg1 <= ExtInt(3);
  const bool second = out.reg1_minus_coreg0 <= ExtInt(3);
  out.holds = first || second;
  out.branch = first && second ? UnobstructedReport::Branch::Both
               : first         ? UnobstructedReport::Branch::First
               : second        ? UnobstructedReport::Branch::Second
                               : UnobstructedReport::Branch::None;
  return out;
}

const char* to_string(UnobstructedReport::Branch b) {
  switch (b) {
    case UnobstructedReport::Branch::First: return "reg0-coreg1";
    case UnobstructedReport::Branch::Second: return "reg1-coreg0";
    case UnobstructedReport::Branch::Both: return "both";
    default: return "none";
  }
}

}  // namespace river
