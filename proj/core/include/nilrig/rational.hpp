#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilrig {

/// Exact rational number. GMP keeps every result canonical: the denominator is
/// positive and coprime to the numerator, and zero is 0/1.
using Rational = mpq_class;

/// Dense coordinate vector over Q.
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign). Unreduced input such as "4/6"
/// is accepted and normalized. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

// a += c * b
inline void axpy(Vector& a, const Rational& c, const Vector& b) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += c * b[i];
}

}  // namespace nilrig
