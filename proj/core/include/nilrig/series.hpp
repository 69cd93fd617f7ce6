#pragma once

#include <cstddef>
#include <vector>

#include "nilrig/rational.hpp"

namespace nilrig {

/// Power series truncated after x^order; coefficient k multiplies x^k.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  /// The series x truncated at `order` (order >= 1).
  static TruncatedSeries x(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return nilrig::is_zero(coeffs_); }

  /// Same coefficients cut down to a lower order.
  TruncatedSeries truncated(std::size_t order) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations truncate at the smaller of the two orders.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);

/// a(b(x)). Throws std::invalid_argument("composition requires zero constant
/// term") when b(0) != 0.
TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// s(-x), coefficient k multiplied by (-1)^k.
TruncatedSeries series_negate_argument(const TruncatedSeries& s);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return series_scale(a, Rational(-1)); }

}  // namespace nilrig
