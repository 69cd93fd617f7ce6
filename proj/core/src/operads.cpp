#include "nilrig/operads.hpp"

#include <stdexcept>

namespace nilrig {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

TruncatedSeries gen_function(const DimSequence& dims, std::size_t order) {
  if (order > dims.dims.size())
    throw std::invalid_argument("order exceeds the length of the dimension sequence");
  TruncatedSeries g(order);
  for (std::size_t a = 1; a <= order; ++a) g[a] = Rational(dims.dims[a - 1]) / Rational(factorial(a));
  return g;
}

DimSequence dual_dims_2nilp(std::size_t n) {
  DimSequence s;
  auto& d = s.dims;  // d[m-1] = d_m
  for (std::size_t m = 1; m <= n; ++m) {
    if (m <= 2) {
      d.emplace_back(1);
      continue;
    }
    mpz_class v = 0;
    const std::size_t k = m / 2;
    if (m % 2 == 1) {
      for (std::size_t i = 1; i <= k; ++i) v += binomial(m, i) * d[i - 1] * d[m - i - 1];
    } else {
      for (std::size_t i = 1; i + 1 <= k; ++i) v += binomial(m, i) * d[i - 1] * d[m - i - 1];
      mpz_class middle = binomial(m, k) * d[k - 1] * d[k - 1];
      v += middle / 2;
    }
    d.push_back(v);
  }
  return s;
}

DimSequence dims_2nilp(std::size_t n) {
  DimSequence s;
  for (std::size_t m = 1; m <= n; ++m) s.dims.emplace_back(m <= 2 ? 1 : 0);
  return s;
}

TruncatedSeries koszul_check(const TruncatedSeries& gP, const TruncatedSeries& gDual) {
  if (sgn(gP[0]) != 0 || sgn(gDual[0]) != 0)
    throw std::invalid_argument("koszul_check needs series with zero constant term");
  const TruncatedSeries inner = -series_negate_argument(gDual);
  const TruncatedSeries composed = series_compose(gP, inner);
  return composed - TruncatedSeries::x(composed.order());
}

std::vector<OperadDim> static_dims_table() {
  return {
      {"2Nilp", 2, 1, "spanned by x1.x2 with x2.x1 = -x1.x2"},
      {"2Nilp", 3, 0, "all (xi.xj).xk vanish"},
      {"AssCubic", 4, 24, "basis ((x_s1 x_s2) x_s3) x_s4 over S_4"},
      {"Gamma(1!1)", 4, 15, "free commutative operad"},
      {"Jord", 4, 11, "Gamma(1!1)(4) modulo R(4)"},
      {"Jord relations R", 4, 4, "S_4-module generated by the linearized identity"},
  };
}

}  // namespace nilrig
