#include "icoflux/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace icoflux {

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    auto num = parse_rational(s.substr(0, slash));
    auto den = parse_rational(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }

  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';

  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_dot) ++frac_digits;
      any_digit = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;

  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i >= s.size()) return std::nullopt;
    long e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      e = e * 10 + (s[i] - '0');
      if (e > 100000) return std::nullopt;
    }
    exponent = eneg ? -e : e;
  }
  if (i != s.size()) return std::nullopt;

  Rational value(mantissa);
  long shift = exponent - frac_digits;
  BigInt pow10 = 1;
  for (long k = 0; k < (shift < 0 ? -shift : shift); ++k) pow10 *= 10;
  if (shift >= 0)
    value *= Rational(pow10);
  else
    value /= Rational(pow10);
  if (neg) value = -value;
  return value;
}

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  return r;
}

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace icoflux
