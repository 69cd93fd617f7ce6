#include "nilrig/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilrig {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");

  // mpz_class rejects a leading '+'.
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Rational r(mpz_class(n, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace nilrig
