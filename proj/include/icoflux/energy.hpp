#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icoflux/invariants.hpp"
#include "icoflux/jacobi.hpp"
#include "icoflux/numeric.hpp"
#include "icoflux/sparse_poly.hpp"

namespace icoflux {

// One expansion coefficient: always carries a double; additionally carries the
// exact rational when the input was a decimal literal, which keeps the
// symbolic energy over a field.
struct ParamValue {
  double value = 0;
  std::optional<Rational> exact;

  static ParamValue from_double(double v) { return {v, std::nullopt}; }
  static ParamValue from_rational(const Rational& r) { return {to_double(r), r}; }
};

// The nine expansion coefficients: quadratic weights (a, b, c, d) for the
// blocks V1, V2, V3, V5 and quartic weights c1..c5.
struct EnergyParams {
  ParamValue a, b, c, d, c1, c2, c3, c4, c5;

  static EnergyParams from_doubles(const std::array<double, 9>& v);
  static EnergyParams from_rationals(const std::array<Rational, 9>& v);

  std::array<const ParamValue*, 9> ordered() const {
    return {&a, &b, &c, &d, &c1, &c2, &c3, &c4, &c5};
  }
  std::array<double, 9> as_doubles() const;
  bool all_exact() const;

  // c1..c5 > 0 keeps the energy coercive; throws std::invalid_argument.
  void validate() const;
};

// Homogeneous small polynomial flattened for fast evaluation; each term keeps
// its variables as a factor list so gradients and Hessians come from
// leave-one-out products, exact in structure.
class CompiledPoly {
 public:
  explicit CompiledPoly(int nvars = 0) : nvars_(nvars) {}
  void add_scaled(const SparsePoly& p, double scale);

  double eval(const double* x) const;
  void add_gradient(const double* x, double* g) const;
  void add_hessian(const double* x, double* h, int stride) const;

 private:
  struct Term {
    double coef;
    std::array<uint8_t, 4> vars;
    uint8_t nfac;
  };
  int nvars_;
  std::vector<Term> terms_;
};

// The nine lifted invariants in x1..x12, ordered as the parameter vector:
// blocks (1,2,3,5) quadratic, then c1..c5 quartics. Exact, cached.
const std::array<SparsePoly, 9>& lifted_energy_invariants();

// Degree-4 invariant energy with fast numeric evaluation through the block
// coordinates eta = P^-1 x and, for exact coefficients, the exact symbolic
// polynomial in x1..x12.
class CompiledEnergy {
 public:
  explicit CompiledEnergy(const EnergyParams& params);

  const EnergyParams& params() const { return params_; }
  bool exact_mode() const { return symbolic_.has_value(); }

  double energy(const Vec12& x) const;
  Vec12 gradient(const Vec12& x) const;
  Mat12 hessian(const Vec12& x) const;

  std::vector<double> hessian_eigenvalues(const Vec12& x) const;

  // Exact forms; throw std::logic_error when a coefficient was not rational.
  const SparsePoly& symbolic() const;
  SparsePoly symbolic_gradient(int var) const;

 private:
  EnergyParams params_;
  std::optional<SparsePoly> symbolic_;
  Mat12 pinv_{};
  CompiledPoly blk1_{1}, blk2_{3}, blk3_{3}, blk5_{5};
};

CompiledEnergy build_energy(const EnergyParams& params);

double eval_energy(const CompiledEnergy& ce, const Vec12& x);
Vec12 eval_gradient(const CompiledEnergy& ce, const Vec12& x);
Mat12 eval_hessian(const CompiledEnergy& ce, const Vec12& x);

// Spectrum of H(0) clustered by multiplicity.
std::vector<EigenCluster> hessian_spectrum_origin(const EnergyParams& params);

// Asserts the H(0) spectrum {a/6 x1, b/10 x3, c/10 x3, d/30 x5} within 1e-9
// relative; returns per-eigenvalue check results.
std::vector<CheckResult> check_origin_spectrum(const EnergyParams& params);

// Applies the face representation to a numeric vector: y_{g(j)} = x_j.
Vec12 apply_perm(const Permutation12& g, const Vec12& x);

struct EquivarianceReport {
  double max_gradient_deviation = 0;  // max over samples and group elements
  double max_energy_deviation = 0;
  bool pass(double tol = 1e-9) const { return max_gradient_deviation <= tol; }
};
EquivarianceReport check_equivariance(const CompiledEnergy& ce, int samples,
                                      uint64_t seed);

}  // namespace icoflux
