#include "nilrig/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilrig {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
  if (order < 1) throw std::invalid_argument("x needs order >= 1");
  TruncatedSeries s(order);
  s[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] * c;
  return out;
}

TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (sgn(b[0]) != 0) throw std::invalid_argument("composition requires zero constant term");
  const std::size_t n = std::min(a.order(), b.order());
  const TruncatedSeries inner = b.truncated(n);
  // Horner: a0 + b(a1 + b(a2 + ...)). b has no constant term, so truncation
  // at every step is exact.
  TruncatedSeries acc(n);
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += a[k];
  }
  return acc;
}

TruncatedSeries series_negate_argument(const TruncatedSeries& s) {
  TruncatedSeries out = s;
  for (std::size_t k = 1; k <= s.order(); k += 2) out[k] = -out[k];
  return out;
}

}  // namespace nilrig
