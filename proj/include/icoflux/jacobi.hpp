#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace icoflux {

// Cyclic Jacobi eigenvalue iteration for a symmetric matrix. Sweeps rotate
// away every off-diagonal pair until the off-diagonal Frobenius norm drops
// below 1e-12 relative to the matrix scale. Returns eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("jacobi: matrix not square");

  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += a[i][j] * a[i][j];
  scale = std::sqrt(scale);
  const double tol = 1e-12 * std::max(1.0, scale);

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) <= 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        double tau = s / (1 + c);
        double apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = a[r][p], arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
      }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

struct EigenCluster {
  double value = 0;       // cluster mean
  int multiplicity = 0;
};

// Groups sorted eigenvalues whose relative gap is below 1e-6.
inline std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& sorted_ev,
                                                     double rel_gap = 1e-6) {
  std::vector<EigenCluster> out;
  for (double v : sorted_ev) {
    if (!out.empty()) {
      double ref = std::max({std::fabs(out.back().value), std::fabs(v), 1e-30});
      if (std::fabs(v - out.back().value) <= rel_gap * ref) {
        auto& c = out.back();
        c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
        ++c.multiplicity;
        continue;
      }
    }
    out.push_back({v, 1});
  }
  return out;
}

}  // namespace icoflux
