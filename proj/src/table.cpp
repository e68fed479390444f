#include "river/table.hpp"

#include "river/bott.hpp"
#include "river/error.hpp"
#include "river/kunneth.hpp"

#include <algorithm>
#include <map>
#include <variant>

namespace river {

struct CohomologyTable::Node {
  struct BottSumData {
    std::vector<HomogeneousTerm> terms;
  };
  struct KunnethData {
    std::vector<long> degrees;
  };
  struct DualData {
    CohomologyTable inner;
  };
  struct TwistData {
    CohomologyTable inner;
    long shift;
  };
  struct SumData {
    std::vector<std::pair<Integer, CohomologyTable>> parts;
  };
  struct LiteralData {
    ColumnRange window;
    IntegerMatrix rows;
  };

  std::variant<BottSumData, KunnethData, DualData, TwistData, SumData, LiteralData> data;
};

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool empty_range(const ColumnRange& r) { return r.hi < r.lo; }

ColumnRange hull(const ColumnRange& a, const ColumnRange& b) {
  if (empty_range(a)) return b;
  if (empty_range(b)) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::vector<HomogeneousTerm> merge_terms(std::vector<HomogeneousTerm> terms) {
  std::map<GenPartition, Rational> merged;
  for (auto& [m, lambda] : terms) merged[lambda] += m;
  std::vector<HomogeneousTerm> out;
  for (auto& [lambda, m] : merged) {
    if (m != 0) out.emplace_back(m, lambda);
  }
  return out;
}

}  // namespace

ColumnRange parse_column_range(std::string_view text) {
  auto colon = text.find(':', 1);  // skip a leading sign
  if (colon == std::string_view::npos) {
    throw ParseError("window must look like lo:hi, got '" + std::string(text) + "'");
  }
  Integer lo = parse_integer(text.substr(0, colon));
  Integer hi = parse_integer(text.substr(colon + 1));
  if (!lo.fits_slong_p() || !hi.fits_slong_p() || hi < lo) {
    throw ParseError("bad window '" + std::string(text) + "'");
  }
  return {lo.get_si(), hi.get_si()};
}

CohomologyTable CohomologyTable::bott_sum(int n, std::vector<HomogeneousTerm> terms) {
  if (n < 1) throw InvalidArgument("ambient dimension must be positive");
  for (const auto& [m, lambda] : terms) {
    if (lambda.n() != n) {
      throw DimensionMismatch("partition " + lambda.str() + " does not have " + std::to_string(n) +
                              " parts");
    }
    if (m < 0) throw InvalidArgument("negative multiplicity for S_" + lambda.str());
  }
  return {n, std::make_shared<const Node>(Node{Node::BottSumData{merge_terms(std::move(terms))}})};
}

CohomologyTable CohomologyTable::homogeneous(const GenPartition& lambda) {
  return bott_sum(lambda.n(), {{Rational(1), lambda}});
}

CohomologyTable CohomologyTable::kunneth(std::vector<long> degrees) {
  if (degrees.empty()) throw InvalidArgument("multidegree must be nonempty");
  const int n = static_cast<int>(degrees.size());
  return {n, std::make_shared<const Node>(Node{Node::KunnethData{std::move(degrees)}})};
}

CohomologyTable CohomologyTable::literal(int n, ColumnRange window, IntegerMatrix rows) {
  if (n < 1) throw InvalidArgument("ambient dimension must be positive");
  if (empty_range(window)) throw InvalidArgument("literal window is empty");
  if (rows.rows() != n + 1 || rows.cols() != window.width()) {
    throw DimensionMismatch("literal grid is " + std::to_string(rows.rows()) + "x" +
                            std::to_string(rows.cols()) + ", expected " + std::to_string(n + 1) +
                            "x" + std::to_string(window.width()));
  }
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
      if (rows(r, c) < 0) throw InvalidArgument("cohomology table entries must be nonnegative");
    }
  }
  return {n, std::make_shared<const Node>(Node{Node::LiteralData{window, std::move(rows)}})};
}

CohomologyTable::Backend CohomologyTable::backend() const {
  return static_cast<Backend>(node_->data.index());
}

Rational CohomologyTable::value(int i, long d) const {
  if (i < 0 || i > n_) return 0;
  return std::visit(
      overloaded{
          [&](const Node::BottSumData& b) {
            Rational acc = 0;
            for (const auto& [m, lambda] : b.terms) {
              auto cell = bott_cohomology(lambda, d);
              if (cell && cell->degree == i) acc += m * cell->dim;
            }
            return acc;
          },
          [&](const Node::KunnethData& k) {
            std::vector<long> shifted = k.degrees;
            for (long& a : shifted) a += d;
            return Rational(product_line_cohomology(shifted, i));
          },
          [&](const Node::DualData& x) { return x.inner.value(n_ - i, -d - n_ - 1); },
          [&](const Node::TwistData& x) { return x.inner.value(i, d + x.shift); },
          [&](const Node::SumData& s) {
            Rational acc = 0;
            for (const auto& [w, t] : s.parts) acc += w * t.value(i, d);
            return acc;
          },
          [&](const Node::LiteralData& l) {
            const long c = i + d;
            if (!l.window.contains(c)) throw WindowExceeded(i, d, c);
            return Rational(l.rows(i, c - l.window.lo));
          },
      },
      node_->data);
}

Integer CohomologyTable::entry(int i, long d) const {
  Rational q = value(i, d);
  if (!is_integral(q)) {
    throw InvalidArgument("non-integral table entry " + to_string(q) + " at h^" + std::to_string(i) +
                          "(F(" + std::to_string(d) + "))");
  }
  return q.get_num();
}

bool CohomologyTable::certified() const {
  return std::visit(overloaded{
                        [](const Node::BottSumData&) { return true; },
                        [](const Node::KunnethData&) { return true; },
                        [](const Node::DualData& x) { return x.inner.certified(); },
                        [](const Node::TwistData& x) { return x.inner.certified(); },
                        [](const Node::SumData& s) {
                          return std::all_of(s.parts.begin(), s.parts.end(),
                                             [](const auto& p) { return p.second.certified(); });
                        },
                        [](const Node::LiteralData&) { return false; },
                    },
                    node_->data);
}

ColumnRange CohomologyTable::support() const {
  return std::visit(
      overloaded{
          [&](const Node::BottSumData& b) {
            ColumnRange r{0, -1};
            for (const auto& [m, lambda] : b.terms) {
              r = hull(r, {-lambda.largest() - n_ - 2, -lambda.smallest() + n_ + 2});
            }
            return r;
          },
          [&](const Node::KunnethData& k) {
            auto [mn, mx] = std::minmax_element(k.degrees.begin(), k.degrees.end());
            return ColumnRange{-*mx - n_ - 2, -*mn + n_ + 2};
          },
          [](const Node::DualData& x) {
            ColumnRange r = x.inner.support();
            if (empty_range(r)) return r;
            return ColumnRange{-r.hi - 1, -r.lo - 1};
          },
          [](const Node::TwistData& x) {
            ColumnRange r = x.inner.support();
            if (empty_range(r)) return r;
            return ColumnRange{r.lo - x.shift, r.hi - x.shift};
          },
          [](const Node::SumData& s) {
            ColumnRange r{0, -1};
            for (const auto& [w, t] : s.parts) r = hull(r, t.support());
            return r;
          },
          [](const Node::LiteralData& l) { return l.window; },
      },
      node_->data);
}

std::optional<ColumnRange> CohomologyTable::domain() const {
  using Result = std::optional<ColumnRange>;
  return std::visit(
      overloaded{
          [](const Node::BottSumData&) -> Result { return std::nullopt; },
          [](const Node::KunnethData&) -> Result { return std::nullopt; },
          [](const Node::DualData& x) -> Result {
            auto r = x.inner.domain();
            if (!r) return r;
            return ColumnRange{-r->hi - 1, -r->lo - 1};
          },
          [](const Node::TwistData& x) -> Result {
            auto r = x.inner.domain();
            if (!r) return r;
            return ColumnRange{r->lo - x.shift, r->hi - x.shift};
          },
          [](const Node::SumData& s) -> Result {
            Result out;
            for (const auto& [w, t] : s.parts) {
              auto r = t.domain();
              if (!r) continue;
              out = out ? ColumnRange{std::max(out->lo, r->lo), std::min(out->hi, r->hi)} : *r;
            }
            return out;
          },
          [](const Node::LiteralData& l) -> Result { return l.window; },
      },
      node_->data);
}

const std::vector<HomogeneousTerm>* CohomologyTable::bott_terms() const {
  auto* b = std::get_if<Node::BottSumData>(&node_->data);
  return b ? &b->terms : nullptr;
}

const std::vector<long>* CohomologyTable::kunneth_degrees() const {
  auto* k = std::get_if<Node::KunnethData>(&node_->data);
  return k ? &k->degrees : nullptr;
}

CohomologyTable dual(const CohomologyTable& t) {
  using Node = CohomologyTable::Node;
  return {t.n_, std::make_shared<const Node>(Node{Node::DualData{t}})};
}

CohomologyTable twist(const CohomologyTable& t, long s) {
  using Node = CohomologyTable::Node;
  if (s == 0) return t;
  return {t.n_, std::make_shared<const Node>(Node{Node::TwistData{t, s}})};
}

CohomologyTable add(const CohomologyTable& a, const CohomologyTable& b) {
  using Node = CohomologyTable::Node;
  if (a.n_ != b.n_) {
    throw DimensionMismatch("cannot add tables on P^" + std::to_string(a.n_) + " and P^" +
                            std::to_string(b.n_));
  }
  const auto* ta = a.bott_terms();
  const auto* tb = b.bott_terms();
  if (ta && tb) {
    std::vector<HomogeneousTerm> terms = *ta;
    terms.insert(terms.end(), tb->begin(), tb->end());
    return CohomologyTable::bott_sum(a.n_, std::move(terms));
  }
  return {a.n_, std::make_shared<const Node>(Node{Node::SumData{{{Integer(1), a}, {Integer(1), b}}}})};
}

CohomologyTable scale(const CohomologyTable& t, const Integer& k) {
  using Node = CohomologyTable::Node;
  if (k <= 0) throw InvalidArgument("multiplicity must be positive");
  if (k == 1) return t;
  if (const auto* terms = t.bott_terms()) {
    std::vector<HomogeneousTerm> scaled = *terms;
    for (auto& [m, lambda] : scaled) m *= k;
    return CohomologyTable::bott_sum(t.n_, std::move(scaled));
  }
  return {t.n_, std::make_shared<const Node>(Node{Node::SumData{{{k, t}}}})};
}

std::optional<std::vector<HomogeneousTerm>> homogeneous_terms(const CohomologyTable& t) {
  using Node = CohomologyTable::Node;
  using Terms = std::vector<HomogeneousTerm>;
  auto collect = [](auto& self, const CohomologyTable& x) -> std::optional<Terms> {
    return std::visit(
        overloaded{
            [](const Node::BottSumData& b) -> std::optional<Terms> { return b.terms; },
            [](const Node::KunnethData&) -> std::optional<Terms> { return std::nullopt; },
            [&](const Node::DualData& d) -> std::optional<Terms> {
              auto inner = self(self, d.inner);
              if (inner) {
                for (auto& [m, lambda] : *inner) lambda = lambda.dual();
              }
              return inner;
            },
            [&](const Node::TwistData& tw) -> std::optional<Terms> {
              auto inner = self(self, tw.inner);
              if (inner) {
                for (auto& [m, lambda] : *inner) lambda = lambda.shifted(tw.shift);
              }
              return inner;
            },
            [&](const Node::SumData& s) -> std::optional<Terms> {
              Terms out;
              for (const auto& [w, part] : s.parts) {
                auto inner = self(self, part);
                if (!inner) return std::nullopt;
                for (auto& [m, lambda] : *inner) out.emplace_back(m * w, lambda);
              }
              return out;
            },
            [](const Node::LiteralData&) -> std::optional<Terms> { return std::nullopt; },
        },
        x.node_->data);
  };
  auto terms = collect(collect, t);
  if (!terms) return terms;
  return merge_terms(std::move(*terms));
}

namespace {

// True when h^j(F(m-j)) = 0 for all j in rows [first, last].
bool column_clean(const CohomologyTable& t, long m, int first, int last) {
  for (int j = first; j <= last; ++j) {
    if (t.value(j, m - j) != 0) return false;
  }
  return true;
}

// Columns worth scanning. Generator tables are scanned one column past their
// support on both sides; literal data only inside its window.
ColumnRange scan_range(const CohomologyTable& t) {
  if (t.certified()) {
    ColumnRange s = t.support();
    if (empty_range(s)) return s;
    return {s.lo - 1, s.hi + 1};
  }
  return *t.domain();
}

void check_index(int k) {
  if (k < 0) throw InvalidArgument("regularity index k must be nonnegative, got " + std::to_string(k));
}

}  // namespace

IndexValue reg(const CohomologyTable& t, int k) {
  check_index(k);
  const int n = t.n();
  if (k >= n) return {ExtInt::neg_infinity(), false};

  if (const auto* terms = t.bott_terms()) {
    if (terms->empty()) return {ExtInt::neg_infinity(), false};
    long best = -terms->front().second.part(k);
    for (const auto& [m, lambda] : *terms) best = std::max(best, -lambda.part(k));
    return {ExtInt(best), false};
  }

  const ColumnRange range = scan_range(t);
  const bool limited = !t.certified();
  if (empty_range(range)) return {ExtInt::neg_infinity(), false};
  for (long m = range.hi; m >= range.lo; --m) {
    if (!column_clean(t, m, k + 1, n)) {
      return {ExtInt(m + 1), limited && m == range.hi};
    }
  }
  if (limited) return {ExtInt(range.lo), true};
  return {ExtInt::neg_infinity(), false};
}

IndexValue coreg(const CohomologyTable& t, int k) {
  check_index(k);
  const int n = t.n();
  if (k >= n) return {ExtInt::pos_infinity(), false};

  const ColumnRange range = scan_range(t);
  const bool limited = !t.certified();
  if (empty_range(range)) return {ExtInt::pos_infinity(), false};
  for (long m = range.lo; m <= range.hi; ++m) {
    if (!column_clean(t, m, 0, n - k - 1)) {
      return {ExtInt(m - 1), limited && m == range.lo};
    }
  }
  if (limited) return {ExtInt(range.hi), true};
  return {ExtInt::pos_infinity(), false};
}

bool RegularityProfile::any_window_limited() const {
  auto limited = [](const IndexValue& v) { return v.window_limited; };
  return std::any_of(reg.begin(), reg.end(), limited) || std::any_of(coreg.begin(), coreg.end(), limited);
}

RegularityProfile regularity_profile(const CohomologyTable& t) {
  RegularityProfile p;
  p.n = t.n();
  for (int k = 0; k < t.n(); ++k) {
    p.reg.push_back(reg(t, k));
    p.coreg.push_back(coreg(t, k));
  }
  return p;
}

bool is_natural(const CohomologyTable& t, std::optional<ColumnRange> window) {
  const int n = t.n();
  ColumnRange cols;
  if (t.certified()) {
    cols = t.support();
    if (empty_range(cols)) return true;
    // Twists left of lo - n - 1 only reach row n, right of hi + 1 only row 0.
    for (long d = cols.lo - n - 1; d <= cols.hi + 1; ++d) {
      int nonzero = 0;
      for (int i = 0; i <= n; ++i) {
        if (t.value(i, d) != 0 && ++nonzero > 1) return false;
      }
    }
    return true;
  }
  cols = window ? *window : *t.domain();
  for (long d = cols.lo - n; d <= cols.hi; ++d) {
    int nonzero = 0;
    for (int i = 0; i <= n; ++i) {
      if (!cols.contains(i + d)) continue;
      if (t.value(i, d) != 0 && ++nonzero > 1) return false;
    }
  }
  return true;
}

bool is_supernatural(const CohomologyTable& t, const std::optional<Polynomial>& chi) {
  Polynomial p;
  if (chi) {
    p = *chi;
  } else if (t.certified()) {
    p = hilbert_polynomial(t);
  } else {
    throw Undecidable(
        "supernaturality of a literal table needs its Hilbert polynomial; the window alone does not "
        "determine it");
  }
  if (!is_natural(t)) return false;
  if (p.degree() != t.n()) return false;
  return p.integer_roots().size() == static_cast<std::size_t>(t.n());
}

Polynomial hilbert_polynomial(const CohomologyTable& t) {
  using Node = CohomologyTable::Node;
  const int n = t.n();
  return std::visit(
      overloaded{
          [](const Node::BottSumData& b) {
            Polynomial chi;
            for (const auto& [m, lambda] : b.terms) chi += m * chi_polynomial(lambda);
            return chi;
          },
          [](const Node::KunnethData& k) {
            Polynomial chi = Polynomial::constant(1);
            for (long a : k.degrees) chi = chi * Polynomial::linear(1, a + 1);
            return chi;
          },
          [n](const Node::DualData& x) {
            Polynomial inner = hilbert_polynomial(x.inner).compose_affine(-1, -n - 1);
            return n % 2 == 0 ? inner : Rational(-1) * inner;
          },
          [](const Node::TwistData& x) {
            return hilbert_polynomial(x.inner).compose_affine(1, x.shift);
          },
          [](const Node::SumData& s) {
            Polynomial chi;
            for (const auto& [w, part] : s.parts) chi += Rational(w) * hilbert_polynomial(part);
            return chi;
          },
          [](const Node::LiteralData&) -> Polynomial {
            throw Undecidable("a literal table does not determine its Hilbert polynomial");
          },
      },
      t.node_->data);
}

std::vector<BeilinsonTerm> beilinson_terms(const CohomologyTable& t, long e) {
  std::vector<BeilinsonTerm> out;
  const long first = std::max(e, 0L);
  const long last = std::min(e + t.n(), static_cast<long>(t.n()));
  for (long j = first; j <= last; ++j) {
    Integer h = t.entry(static_cast<int>(j), e - j);
    if (h != 0) out.push_back({static_cast<int>(j), h});
  }
  return out;
}

RationalMatrix window_values(const CohomologyTable& t, ColumnRange window) {
  RationalMatrix out(t.n() + 1, window.width());
  for (int i = 0; i <= t.n(); ++i) {
    for (long c = window.lo; c <= window.hi; ++c) out(i, c - window.lo) = t.value(i, c - i);
  }
  return out;
}

}  // namespace river
