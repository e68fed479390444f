#include "river/exterior.hpp"

#include "river/error.hpp"

#include <algorithm>

namespace river {

namespace {

constexpr std::array<std::array<int, 4>, 5> kFourFormBasis{{
    {1, 2, 3, 4},
    {1, 2, 3, 5},
    {1, 2, 4, 5},
    {1, 3, 4, 5},
    {2, 3, 4, 5},
}};

int four_form_index(std::array<int, 4> sorted) {
  for (int r = 0; r < 5; ++r) {
    if (kFourFormBasis[static_cast<std::size_t>(r)] == sorted) return r;
  }
  return -1;
}

// Sign of the permutation sorting v, or 0 on a repeated index.
int sort_sign(std::array<int, 4>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] == v[j + 1]) return 0;
  }
  return sign;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

const std::array<std::pair<int, int>, 10>& two_form_basis() {
  static const std::array<std::pair<int, int>, 10> basis{{
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
  }};
  return basis;
}

int two_form_index(int i, int j) {
  const auto& basis = two_form_basis();
  auto it = std::find(basis.begin(), basis.end(), std::pair{i, j});
  if (it == basis.end()) {
    throw InvalidArgument("e_" + std::to_string(i) + "∧e_" + std::to_string(j) +
                          " is not a basis 2-form (need 1 <= i < j <= 5)");
  }
  return static_cast<int>(it - basis.begin());
}

TwoForm zero_two_form() {
  TwoForm eta;
  for (Eigen::Index k = 0; k < eta.size(); ++k) eta(k) = 0;
  return eta;
}

TwoForm monomial_two_form(int i, int j) {
  TwoForm eta = zero_two_form();
  eta(two_form_index(i, j)) = 1;
  return eta;
}

TwoForm two_form_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("a 2-form is a list of [[i, j], \"p/q\"] pairs");
  TwoForm eta = zero_two_form();
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || item[0].size() != 2 ||
        !item[0][0].is_number_integer() || !item[0][1].is_number_integer()) {
      throw ParseError("bad 2-form term " + item.dump());
    }
    Rational c;
    if (item[1].is_string()) {
      c = parse_rational(item[1].get<std::string>());
    } else if (item[1].is_number_integer()) {
      c = Rational(Integer(std::to_string(item[1].get<std::int64_t>())));
    } else {
      throw ParseError("bad 2-form coefficient " + item[1].dump());
    }
    eta(two_form_index(item[0][0].get<int>(), item[0][1].get<int>())) += c;
  }
  return eta;
}

nlohmann::json two_form_to_json(const TwoForm& eta) {
  nlohmann::json out = nlohmann::json::array();
  const auto& basis = two_form_basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational& c = eta(static_cast<Eigen::Index>(k));
    if (c != 0) out.push_back({{basis[k].first, basis[k].second}, to_string(c)});
  }
  return out;
}

TwoForm random_two_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  TwoForm eta;
  for (Eigen::Index k = 0; k < eta.size(); ++k) {
    const int p = num(rng);
    eta(k) = frac(p, den(rng));
  }
  return eta;
}

WedgeMatrix wedge_matrix(const TwoForm& eta1, const TwoForm& eta2) {
  WedgeMatrix m;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = 0;
  }
  const auto& basis = two_form_basis();
  const std::array<const TwoForm*, 2> etas{&eta1, &eta2};
  for (std::size_t block = 0; block < etas.size(); ++block) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto [a, b] = basis[col];
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const Rational& coeff = (*etas[block])(static_cast<Eigen::Index>(k));
        if (coeff == 0) continue;
        std::array<int, 4> word{a, b, basis[k].first, basis[k].second};
        const int sign = sort_sign(word);
        if (sign == 0) continue;
        const auto row = static_cast<Eigen::Index>(5 * block + four_form_index(word));
        m(row, static_cast<Eigen::Index>(col)) += sign * coeff;
      }
    }
  }
  return m;
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  return out;
}

Eigen::Index rank_over_rationals(const RationalMatrix& m) { return bareiss_rank(clear_denominators(m)); }

int kernel_dim(const TwoForm& eta1, const TwoForm& eta2) {
  const RationalMatrix m = wedge_matrix(eta1, eta2);
  return static_cast<int>(m.cols() - rank_over_rationals(m));
}

Eigen::Index rank_mod_prime(const IntegerMatrix& m, std::uint64_t p) {
  const Integer modulus(std::to_string(p));
  Matrix<std::uint64_t> a(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      Integer v = m(r, c) % modulus;
      if (v < 0) v += modulus;
      a(r, c) = std::stoull(v.get_str());
    }
  }
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < a.rows() && a(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    a.row(rank).swap(a.row(pivot_row));
    const std::uint64_t inv = pow_mod(a(rank, col), p - 2, p);
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      const std::uint64_t factor = mul_mod(a(i, col), inv, p);
      if (factor == 0) continue;
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        a(i, j) = (a(i, j) + p - mul_mod(factor, a(rank, j), p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace river
