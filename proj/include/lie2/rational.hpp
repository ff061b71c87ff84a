#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lie2 {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Accepts "p", "p/q", optional sign and surrounding blanks. Anything else
// (decimals, exponents, zero denominators) is rejected.
inline Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  auto digits = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace lie2
