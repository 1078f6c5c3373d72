#pragma once

#include <cmath>
#include <stdexcept>

#include "icoflux/rational.hpp"

namespace icoflux {

// Element of Q(sqrt A, sqrt B) for fixed non-negative rationals A, B:
// value = c0 + c1 sqrt(A) + c2 sqrt(B) + c3 sqrt(A) sqrt(B).
//
// Construction folds every degeneracy (zero or perfect-square radicand, equal
// radicands, perfect-square product) into lower components, so is_zero() on
// the components decides the represented number exactly. Branch points have
// coordinates in this ring whenever the parameters are rational, which is how
// the stationarity of the closed forms is certified without floating point.
class QuadExt {
 public:
  QuadExt() = default;

  QuadExt(Rational a_rad, Rational b_rad, Rational c0, Rational c1, Rational c2,
          Rational c3)
      : a_(std::move(a_rad)), b_(std::move(b_rad)), c0_(std::move(c0)),
        c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
    normalize();
  }

  static QuadExt rational(const Rational& r, const Rational& a_rad,
                          const Rational& b_rad) {
    return {a_rad, b_rad, r, 0, 0, 0};
  }
  static QuadExt sqrt_a(const Rational& a_rad, const Rational& b_rad) {
    return {a_rad, b_rad, 0, 1, 0, 0};
  }
  static QuadExt sqrt_b(const Rational& a_rad, const Rational& b_rad) {
    return {a_rad, b_rad, 0, 0, 1, 0};
  }

  bool is_zero() const { return c0_ == 0 && c1_ == 0 && c2_ == 0 && c3_ == 0; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.check_context(y);
    return {x.a_, x.b_, x.c0_ + y.c0_, x.c1_ + y.c1_, x.c2_ + y.c2_, x.c3_ + y.c3_};
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.check_context(y);
    return {x.a_, x.b_, x.c0_ - y.c0_, x.c1_ - y.c1_, x.c2_ - y.c2_, x.c3_ - y.c3_};
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check_context(y);
    const Rational &A = x.a_, &B = x.b_;
    Rational r0 = x.c0_ * y.c0_ + A * x.c1_ * y.c1_ + B * x.c2_ * y.c2_ +
                  A * B * x.c3_ * y.c3_;
    Rational r1 = x.c0_ * y.c1_ + x.c1_ * y.c0_ + B * (x.c2_ * y.c3_ + x.c3_ * y.c2_);
    Rational r2 = x.c0_ * y.c2_ + x.c2_ * y.c0_ + A * (x.c1_ * y.c3_ + x.c3_ * y.c1_);
    Rational r3 = x.c0_ * y.c3_ + x.c3_ * y.c0_ + x.c1_ * y.c2_ + x.c2_ * y.c1_;
    return {A, B, std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  }

  QuadExt scaled(const Rational& s) const {
    return {a_, b_, c0_ * s, c1_ * s, c2_ * s, c3_ * s};
  }

  double to_double() const {
    double sa = std::sqrt(icoflux::to_double(a_));
    double sb = std::sqrt(icoflux::to_double(b_));
    return icoflux::to_double(c0_) + icoflux::to_double(c1_) * sa +
           icoflux::to_double(c2_) * sb + icoflux::to_double(c3_) * sa * sb;
  }

 private:
  void check_context(const QuadExt& o) const {
    if (a_ != o.a_ || b_ != o.b_)
      throw std::invalid_argument("QuadExt: mixed radicands");
  }

  void normalize() {
    if (a_ < 0 || b_ < 0)
      throw std::invalid_argument("QuadExt: negative radicand");
    // sqrt(0) = 0
    if (a_ == 0) { c1_ = 0; c3_ = 0; }
    if (b_ == 0) { c2_ = 0; c3_ = 0; }
    // perfect-square radicands collapse to rationals
    if (auto ra = rational_sqrt_exact(a_); ra && a_ != 0) {
      c0_ += c1_ * *ra;
      c2_ += c3_ * *ra;
      c1_ = 0; c3_ = 0; a_ = 0;
    }
    if (auto rb = rational_sqrt_exact(b_); rb && b_ != 0) {
      c0_ += c2_ * *rb;
      c1_ += c3_ * *rb;
      c2_ = 0; c3_ = 0; b_ = 0;
    }
    // equal radicands: sqrt(A) sqrt(B) = A
    if (a_ != 0 && a_ == b_) {
      c0_ += c3_ * a_;
      c1_ += c2_;
      c2_ = 0; c3_ = 0; b_ = 0;
    }
    // product a perfect square s^2: sqrt(B) = (s/A) sqrt(A), sqrt(A)sqrt(B) = s
    if (a_ != 0 && b_ != 0) {
      if (auto s = rational_sqrt_exact(a_ * b_)) {
        c0_ += c3_ * *s;
        c1_ += c2_ * (*s / a_);
        c2_ = 0; c3_ = 0; b_ = 0;
      }
    }
  }

  Rational a_, b_;                 // radicands after folding
  Rational c0_, c1_, c2_, c3_;
};

}  // namespace icoflux
