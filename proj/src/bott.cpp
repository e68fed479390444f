#include "river/bott.hpp"

#include "river/error.hpp"

#include <algorithm>
#include <vector>

namespace river {

namespace {

std::vector<long> dotted_weight(const GenPartition& lambda) {
  const int n = lambda.n();
  std::vector<long> beta;
  beta.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = n - 1; k >= 0; --k) beta.push_back(lambda.part(k) + k + 1);
  return beta;
}

}  // namespace

BottResult bott_cohomology(const GenPartition& lambda, long d) {
  std::vector<long> beta = dotted_weight(lambda);
  beta.push_back(-d);

  int inversions = 0;
  for (std::size_t p = 0; p < beta.size(); ++p) {
    for (std::size_t q = p + 1; q < beta.size(); ++q) {
      if (beta[p] == beta[q]) return std::nullopt;
      if (beta[p] < beta[q]) ++inversions;
    }
  }

  std::sort(beta.begin(), beta.end(), std::greater<>{});
  const long top = static_cast<long>(beta.size()) - 1;
  for (std::size_t p = 0; p < beta.size(); ++p) beta[p] -= top - static_cast<long>(p);
  return BottCell{inversions, schur_dim(beta)};
}

Integer bott_entry(const GenPartition& lambda, int i, long d) {
  auto cell = bott_cohomology(lambda, d);
  if (cell && cell->degree == i) return cell->dim;
  return 0;
}

long homogeneous_reg(const GenPartition& lambda, int k) {
  if (k < 0 || k >= lambda.n()) {
    throw InvalidArgument("regularity index " + std::to_string(k) + " out of range 0.." +
                          std::to_string(lambda.n() - 1));
  }
  return -lambda.part(k);
}

Polynomial chi_polynomial(const GenPartition& lambda) {
  const std::vector<long> beta = dotted_weight(lambda);
  const long m = static_cast<long>(beta.size());  // == n

  Rational constant = 1;
  for (long p = 0; p < m; ++p) {
    for (long q = p + 1; q < m; ++q) {
      constant *= frac(beta[static_cast<std::size_t>(p)] - beta[static_cast<std::size_t>(q)], q - p);
    }
  }
  // Pairs with the symbolic last entry -d: (beta_p + d) / (n - p).
  Polynomial chi = Polynomial::constant(constant);
  for (long p = 0; p < m; ++p) {
    chi = chi * Polynomial::linear(frac(1, m - p), frac(beta[static_cast<std::size_t>(p)], m - p));
  }
  return chi;
}

}  // namespace river
