#include "river/kunneth.hpp"

#include "river/error.hpp"

namespace river {

Integer line_h0(long a) { return a >= 0 ? Integer(a + 1) : Integer(0); }

Integer line_h1(long a) { return a <= -2 ? Integer(-a - 1) : Integer(0); }

Integer product_line_cohomology(std::span<const long> degrees, int i) {
  const auto m = static_cast<int>(degrees.size());
  if (i < 0 || i > m) return 0;
  // Coefficient of t^i in prod_j (h0_j + h1_j t).
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1, Integer(0));
  poly[0] = 1;
  int deg = 0;
  for (long a : degrees) {
    const Integer h0 = line_h0(a);
    const Integer h1 = line_h1(a);
    ++deg;
    for (int k = deg; k >= 0; --k) {
      Integer next = poly[static_cast<std::size_t>(k)] * h0;
      if (k > 0) next += poly[static_cast<std::size_t>(k - 1)] * h1;
      poly[static_cast<std::size_t>(k)] = next;
    }
  }
  return poly[static_cast<std::size_t>(i)];
}

CohomologyTable pushforward_table(std::vector<long> degrees) {
  return CohomologyTable::kunneth(std::move(degrees));
}

std::vector<long> parse_multidegree(std::string_view text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Integer v = parse_integer(field);
    if (!v.fits_slong_p()) throw ParseError("degree out of range: " + std::string(field));
    out.push_back(v.get_si());
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace river
