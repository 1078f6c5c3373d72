#include "icoflux/numeric.hpp"

namespace icoflux {

std::optional<Vec12> lu_solve(Mat12 a, Vec12 b) {
  std::array<int, 12> perm;
  for (int i = 0; i < 12; ++i) perm[i] = i;
  for (int col = 0; col < 12; ++col) {
    int piv = col;
    for (int r = col + 1; r < 12; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300) return std::nullopt;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < 12; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0) continue;
      a[r][col] = 0;
      for (int j = col + 1; j < 12; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  Vec12 x{};
  for (int i = 11; i >= 0; --i) {
    double acc = b[i];
    for (int j = i + 1; j < 12; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

namespace {

inline uint64_t splitmix64(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

UniformSampler::UniformSampler(uint64_t seed, uint64_t stream) {
  state_ = seed ^ (0x6c62272e07bb0142ULL * (stream + 1));
  // warm up so nearby streams decorrelate
  for (int i = 0; i < 4; ++i) splitmix64(state_);
}

double UniformSampler::next() {
  return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

double UniformSampler::next_in(double lo, double hi) {
  return lo + (hi - lo) * next();
}

}  // namespace icoflux
