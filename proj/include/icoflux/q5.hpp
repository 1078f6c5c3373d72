#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "icoflux/rational.hpp"

namespace icoflux {

// Element of the real quadratic field Q(sqrt 5): value = rat + irr * sqrt(5).
// Components stay reduced because Rational is canonical; equality is
// component-wise. The golden ratio tau = (1 + sqrt 5)/2 is (1/2, 1/2).
struct Q5Scalar {
  Rational rat;
  Rational irr;

  Q5Scalar() = default;
  Q5Scalar(int n) : rat(n) {}            // NOLINT: implicit by design
  Q5Scalar(long long n) : rat(n) {}      // NOLINT
  Q5Scalar(Rational r) : rat(std::move(r)) {}  // NOLINT
  Q5Scalar(Rational r, Rational i) : rat(std::move(r)), irr(std::move(i)) {}

  static Q5Scalar sqrt5() { return {Rational(0), Rational(1)}; }
  static Q5Scalar tau() { return {Rational(1, 2), Rational(1, 2)}; }

  bool is_zero() const { return rat == 0 && irr == 0; }
  bool is_rational() const { return irr == 0; }

  friend bool operator==(const Q5Scalar& a, const Q5Scalar& b) {
    return a.rat == b.rat && a.irr == b.irr;
  }

  Q5Scalar operator-() const { return {-rat, -irr}; }

  friend Q5Scalar operator+(const Q5Scalar& a, const Q5Scalar& b) {
    return {a.rat + b.rat, a.irr + b.irr};
  }
  friend Q5Scalar operator-(const Q5Scalar& a, const Q5Scalar& b) {
    return {a.rat - b.rat, a.irr - b.irr};
  }
  friend Q5Scalar operator*(const Q5Scalar& a, const Q5Scalar& b) {
    return {a.rat * b.rat + 5 * a.irr * b.irr, a.rat * b.irr + a.irr * b.rat};
  }
  Q5Scalar& operator+=(const Q5Scalar& o) { return *this = *this + o; }
  Q5Scalar& operator-=(const Q5Scalar& o) { return *this = *this - o; }
  Q5Scalar& operator*=(const Q5Scalar& o) { return *this = *this * o; }

  // Conjugate flips the sign of sqrt(5); the field norm rat^2 - 5 irr^2
  // vanishes only at zero, which makes division well defined.
  Q5Scalar conjugate() const { return {rat, -irr}; }

  Q5Scalar inverse() const {
    Rational n = rat * rat - 5 * irr * irr;
    if (n == 0) throw std::domain_error("Q5Scalar: division by zero");
    return {rat / n, -irr / n};
  }

  friend Q5Scalar operator/(const Q5Scalar& a, const Q5Scalar& b) {
    return a * b.inverse();
  }

  double to_double() const {
    static const double kSqrt5 = std::sqrt(5.0);
    return icoflux::to_double(rat) + icoflux::to_double(irr) * kSqrt5;
  }

  // Canonical text form "r+s*sqrt5" with reduced fractions; pure parts are
  // shortened ("3/2", "-sqrt5", "2/5*sqrt5").
  std::string str() const;
};

std::string q5_to_string(const Q5Scalar& v);

}  // namespace icoflux
