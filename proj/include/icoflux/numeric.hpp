#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace icoflux {

using Vec12 = std::array<double, 12>;
using Mat12 = std::array<std::array<double, 12>, 12>;

inline double max_abs(const Vec12& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

inline Vec12 matvec(const Mat12& m, const Vec12& v) {
  Vec12 r{};
  for (int i = 0; i < 12; ++i) {
    double acc = 0;
    for (int j = 0; j < 12; ++j) acc += m[i][j] * v[j];
    r[i] = acc;
  }
  return r;
}

inline Vec12 matvec_transposed(const Mat12& m, const Vec12& v) {
  Vec12 r{};
  for (int j = 0; j < 12; ++j) {
    double acc = 0;
    for (int i = 0; i < 12; ++i) acc += m[i][j] * v[i];
    r[j] = acc;
  }
  return r;
}

// M^T H M for a symmetric H.
inline Mat12 sandwich_transposed(const Mat12& m, const Mat12& h) {
  Mat12 tmp{}, out{};
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      double acc = 0;
      for (int k = 0; k < 12; ++k) acc += h[i][k] * m[k][j];
      tmp[i][j] = acc;
    }
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      double acc = 0;
      for (int k = 0; k < 12; ++k) acc += m[k][i] * tmp[k][j];
      out[i][j] = acc;
    }
  return out;
}

// Solves A x = b by LU with partial pivoting; nullopt when A is singular to
// working precision.
std::optional<Vec12> lu_solve(Mat12 a, Vec12 b);

// Deterministic uniforms independent of the standard library's distribution
// internals: a splitmix64 stream keyed by (seed, stream).
class UniformSampler {
 public:
  UniformSampler(uint64_t seed, uint64_t stream);
  double next();                         // in [0, 1)
  double next_in(double lo, double hi);  // in [lo, hi)

 private:
  uint64_t state_;
};

}  // namespace icoflux
