#include "icoflux/q5.hpp"

namespace icoflux {

namespace {

std::string sqrt5_part(const Rational& s) {
  if (s == 1) return "sqrt5";
  if (s == -1) return "-sqrt5";
  return to_string(s) + "*sqrt5";
}

}  // namespace

std::string Q5Scalar::str() const {
  if (irr == 0) return to_string(rat);
  if (rat == 0) return sqrt5_part(irr);
  std::string out = to_string(rat);
  out += irr > 0 ? "+" : "-";
  Rational mag = irr > 0 ? irr : Rational(-irr);
  out += mag == 1 ? "sqrt5" : to_string(mag) + "*sqrt5";
  return out;
}

std::string q5_to_string(const Q5Scalar& v) { return v.str(); }

}  // namespace icoflux
