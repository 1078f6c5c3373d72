#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace icoflux {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers. cpp_rational keeps the canonical form we rely on:
// always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Parses "3", "-5/4", "0.25", "-1.5e-3" into an exact rational.
// Returns nullopt if the string is not a finite decimal/fraction literal.
std::optional<Rational> parse_rational(const std::string& text);

// Floor of the integer square root; nullopt for negative input.
std::optional<BigInt> integer_sqrt_exact(const BigInt& n);

// sqrt(r) if r is a perfect square of a rational, else nullopt.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

}  // namespace icoflux
