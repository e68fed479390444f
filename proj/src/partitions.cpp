#include "river/partitions.hpp"

#include "river/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace river {

GenPartition::GenPartition(std::vector<long> parts_largest_first)
    : parts_(std::move(parts_largest_first)) {
  if (parts_.empty()) throw InvalidArgument("partition must have at least one part");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{})) {
    throw InvalidArgument("partition parts must be weakly decreasing: " + str());
  }
}

GenPartition GenPartition::zero(int n) { return constant(n, 0); }

GenPartition GenPartition::constant(int n, long t) {
  if (n < 1) throw InvalidArgument("partition length must be positive");
  return GenPartition(std::vector<long>(static_cast<std::size_t>(n), t));
}

GenPartition GenPartition::parse(std::string_view text) {
  std::vector<long> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Integer v = parse_integer(field);
    if (!v.fits_slong_p()) throw ParseError("partition part out of range: " + std::string(field));
    parts.push_back(v.get_si());
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return GenPartition(std::move(parts));
}

long GenPartition::part(int k) const {
  if (k < 0 || k >= n()) {
    throw InvalidArgument("part index " + std::to_string(k) + " out of range for length " +
                          std::to_string(n()));
  }
  return parts_[static_cast<std::size_t>(n() - 1 - k)];
}

long GenPartition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

GenPartition GenPartition::shifted(long c) const {
  GenPartition out = *this;
  for (long& p : out.parts_) p += c;
  return out;
}

GenPartition GenPartition::dual() const {
  std::vector<long> parts(parts_.rbegin(), parts_.rend());
  for (long& p : parts) p = -p;
  return GenPartition(std::move(parts));
}

std::string GenPartition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

bool leq(const GenPartition& lambda, const GenPartition& mu) {
  if (lambda.n() != mu.n()) {
    throw DimensionMismatch("cannot compare " + lambda.str() + " with " + mu.str());
  }
  for (int k = 0; k < lambda.n(); ++k) {
    if (lambda.part(k) > mu.part(k)) return false;
  }
  return true;
}

Integer schur_dim(std::span<const long> nu) {
  if (nu.empty()) throw InvalidArgument("schur_dim of an empty weight");
  if (!std::is_sorted(nu.begin(), nu.end(), std::greater<>{})) {
    throw InvalidArgument("schur_dim requires a weakly decreasing weight");
  }
  Integer num = 1;
  Integer den = 1;
  const auto N = static_cast<long>(nu.size());
  for (long i = 0; i < N; ++i) {
    for (long j = i + 1; j < N; ++j) {
      num *= Integer(nu[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(j)] + j - i);
      den *= Integer(j - i);
    }
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

namespace {

// Enumerates Littlewood-Richardson tableaux of shape nu/lambda and content mu
// by adding the letters 1, 2, ... as successive horizontal strips. Rows are
// capped at n, which discards exactly the terms that vanish in rank n.
class LRTableauWalker {
 public:
  LRTableauWalker(std::vector<long> lambda, std::vector<long> mu)
      : n_(lambda.size()), shape_(std::move(lambda)), content_(std::move(mu)) {
    while (!content_.empty() && content_.back() == 0) content_.pop_back();
    counts_.assign(n_, std::vector<long>(content_.size(), 0));
  }

  std::map<std::vector<long>, Integer> run() {
    add_letter(0);
    return result_;
  }

 private:
  void add_letter(std::size_t letter) {
    if (letter == content_.size()) {
      result_[shape_] += 1;
      return;
    }
    const std::vector<long> before = shape_;
    add_strip(letter, 0, content_[letter], before);
  }

  void add_strip(std::size_t letter, std::size_t row, long remaining, const std::vector<long>& before) {
    if (remaining == 0) {
      if (lattice_ok(letter)) add_letter(letter + 1);
      return;
    }
    if (row == n_) return;
    long cap = row == 0 ? remaining : std::min(remaining, before[row - 1] - before[row]);
    for (long x = cap; x >= 0; --x) {
      shape_[row] += x;
      counts_[row][letter] += x;
      add_strip(letter, row + 1, remaining - x, before);
      shape_[row] -= x;
      counts_[row][letter] -= x;
    }
  }

  // Reading rows top to bottom, right to left, every prefix must contain at
  // least as many (letter-1)s as letters. Within a row the larger letter
  // sits to the right, so it is read first.
  bool lattice_ok(std::size_t letter) const {
    if (letter == 0) return true;
    long prev = 0;
    long cur = 0;
    for (std::size_t r = 0; r < n_; ++r) {
      cur += counts_[r][letter];
      if (cur > prev) return false;
      prev += counts_[r][letter - 1];
    }
    return true;
  }

  std::size_t n_;
  std::vector<long> shape_;
  std::vector<long> content_;
  std::vector<std::vector<long>> counts_;
  std::map<std::vector<long>, Integer> result_;
};

}  // namespace

LRExpansion lr_expand(const GenPartition& lambda, const GenPartition& mu) {
  if (lambda.n() != mu.n()) {
    throw DimensionMismatch("lr_expand: lengths differ (" + lambda.str() + " vs " + mu.str() + ")");
  }
  const long shift_l = -std::min(lambda.smallest(), 0L);
  const long shift_m = -std::min(mu.smallest(), 0L);
  const GenPartition l0 = lambda.shifted(shift_l);
  const GenPartition m0 = mu.shifted(shift_m);

  LRTableauWalker walker({l0.parts().begin(), l0.parts().end()},
                         {m0.parts().begin(), m0.parts().end()});
  LRExpansion out;
  for (auto& [shape, mult] : walker.run()) {
    out.emplace_back(GenPartition(shape).shifted(-shift_l - shift_m), mult);
  }
  return out;
}

}  // namespace river
