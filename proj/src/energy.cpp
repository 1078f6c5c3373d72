#include "icoflux/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace icoflux {

EnergyParams EnergyParams::from_doubles(const std::array<double, 9>& v) {
  EnergyParams p;
  auto fields = std::array<ParamValue*, 9>{&p.a, &p.b, &p.c, &p.d, &p.c1,
                                           &p.c2, &p.c3, &p.c4, &p.c5};
  for (int i = 0; i < 9; ++i) *fields[i] = ParamValue::from_double(v[i]);
  return p;
}

EnergyParams EnergyParams::from_rationals(const std::array<Rational, 9>& v) {
  EnergyParams p;
  auto fields = std::array<ParamValue*, 9>{&p.a, &p.b, &p.c, &p.d, &p.c1,
                                           &p.c2, &p.c3, &p.c4, &p.c5};
  for (int i = 0; i < 9; ++i) *fields[i] = ParamValue::from_rational(v[i]);
  return p;
}

std::array<double, 9> EnergyParams::as_doubles() const {
  std::array<double, 9> v{};
  auto fields = ordered();
  for (int i = 0; i < 9; ++i) v[i] = fields[i]->value;
  return v;
}

bool EnergyParams::all_exact() const {
  for (const ParamValue* f : ordered())
    if (!f->exact) return false;
  return true;
}

void EnergyParams::validate() const {
  const char* names[] = {"c1", "c2", "c3", "c4", "c5"};
  const ParamValue* quartic[] = {&c1, &c2, &c3, &c4, &c5};
  for (int i = 0; i < 5; ++i)
    if (!(quartic[i]->value > 0))
      throw std::invalid_argument(std::string("quartic coefficient ") + names[i] +
                                  " must be positive (energy must grow at infinity)");
}

void CompiledPoly::add_scaled(const SparsePoly& p, double scale) {
  if (p.nvars() != nvars_)
    throw std::invalid_argument("CompiledPoly: variable count mismatch");
  for (const auto& [mono, coef] : p.terms()) {
    Term t{};
    t.coef = coef.to_double() * scale;
    t.nfac = 0;
    for (int v = 0; v < p.nvars(); ++v)
      for (int e = 0; e < mono.exps[v]; ++e) {
        if (t.nfac >= 4) throw std::invalid_argument("CompiledPoly: degree above 4");
        t.vars[t.nfac++] = static_cast<uint8_t>(v);
      }
    if (t.coef != 0) terms_.push_back(t);
  }
}

double CompiledPoly::eval(const double* x) const {
  double acc = 0;
  for (const auto& t : terms_) {
    double prod = t.coef;
    for (int k = 0; k < t.nfac; ++k) prod *= x[t.vars[k]];
    acc += prod;
  }
  return acc;
}

void CompiledPoly::add_gradient(const double* x, double* g) const {
  for (const auto& t : terms_) {
    double f[4], prefix[5], suffix[5];
    for (int k = 0; k < t.nfac; ++k) f[k] = x[t.vars[k]];
    prefix[0] = 1;
    for (int k = 0; k < t.nfac; ++k) prefix[k + 1] = prefix[k] * f[k];
    suffix[t.nfac] = 1;
    for (int k = t.nfac - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * f[k];
    for (int k = 0; k < t.nfac; ++k)
      g[t.vars[k]] += t.coef * prefix[k] * suffix[k + 1];
  }
}

void CompiledPoly::add_hessian(const double* x, double* h, int stride) const {
  for (const auto& t : terms_) {
    double f[4];
    for (int k = 0; k < t.nfac; ++k) f[k] = x[t.vars[k]];
    for (int i = 0; i < t.nfac; ++i)
      for (int j = 0; j < t.nfac; ++j) {
        if (i == j) continue;
        double prod = t.coef;
        for (int k = 0; k < t.nfac; ++k)
          if (k != i && k != j) prod *= f[k];
        h[t.vars[i] * stride + t.vars[j]] += prod;
      }
  }
}

const std::array<SparsePoly, 9>& lifted_energy_invariants() {
  static const std::array<SparsePoly, 9> lifted = [] {
    return std::array<SparsePoly, 9>{
        lift_to_R12(power_invariant(2), 1),
        lift_to_R12(block_invariant(2, 2, 1), 2),
        lift_to_R12(block_invariant(3, 2, 1), 3),
        lift_to_R12(block_invariant(5, 2, 1), 5),
        lift_to_R12(power_invariant(4), 1),
        lift_to_R12(block_invariant(2, 4, 1), 2),
        lift_to_R12(block_invariant(3, 4, 1), 3),
        lift_to_R12(block_invariant(5, 4, 1), 5),
        lift_to_R12(block_invariant(5, 4, 2), 5),
    };
  }();
  return lifted;
}

CompiledEnergy::CompiledEnergy(const EnergyParams& params) : params_(params) {
  params_.validate();

  auto pinv_rows = canonical_P_inverse().to_double();
  for (int i = 0; i < kFaces; ++i)
    for (int j = 0; j < kFaces; ++j) pinv_[i][j] = pinv_rows[i][j];

  blk1_.add_scaled(power_invariant(2), params_.a.value);
  blk1_.add_scaled(power_invariant(4), params_.c1.value);
  blk2_.add_scaled(block_invariant(2, 2, 1), params_.b.value);
  blk2_.add_scaled(block_invariant(2, 4, 1), params_.c2.value);
  blk3_.add_scaled(block_invariant(3, 2, 1), params_.c.value);
  blk3_.add_scaled(block_invariant(3, 4, 1), params_.c3.value);
  blk5_.add_scaled(block_invariant(5, 2, 1), params_.d.value);
  blk5_.add_scaled(block_invariant(5, 4, 1), params_.c4.value);
  blk5_.add_scaled(block_invariant(5, 4, 2), params_.c5.value);

  if (params_.all_exact()) {
    const auto& lifted = lifted_energy_invariants();
    auto fields = params_.ordered();
    SparsePoly e(kFaces);
    for (int i = 0; i < 9; ++i)
      e = e + lifted[i].scaled(Q5Scalar(*fields[i]->exact));
    symbolic_ = std::move(e);
  }
}

double CompiledEnergy::energy(const Vec12& x) const {
  Vec12 eta = matvec(pinv_, x);
  return blk1_.eval(&eta[0]) + blk2_.eval(&eta[1]) + blk3_.eval(&eta[4]) +
         blk5_.eval(&eta[7]);
}

Vec12 CompiledEnergy::gradient(const Vec12& x) const {
  Vec12 eta = matvec(pinv_, x);
  Vec12 geta{};
  blk1_.add_gradient(&eta[0], &geta[0]);
  blk2_.add_gradient(&eta[1], &geta[1]);
  blk3_.add_gradient(&eta[4], &geta[4]);
  blk5_.add_gradient(&eta[7], &geta[7]);
  return matvec_transposed(pinv_, geta);
}

Mat12 CompiledEnergy::hessian(const Vec12& x) const {
  Vec12 eta = matvec(pinv_, x);
  Mat12 heta{};
  blk1_.add_hessian(&eta[0], &heta[0][0], 12);
  blk2_.add_hessian(&eta[1], &heta[1][1], 12);
  blk3_.add_hessian(&eta[4], &heta[4][4], 12);
  blk5_.add_hessian(&eta[7], &heta[7][7], 12);
  return sandwich_transposed(pinv_, heta);
}

std::vector<double> CompiledEnergy::hessian_eigenvalues(const Vec12& x) const {
  Mat12 h = hessian(x);
  std::vector<std::vector<double>> m(12, std::vector<double>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m[i][j] = h[i][j];
  return jacobi_eigenvalues(std::move(m));
}

const SparsePoly& CompiledEnergy::symbolic() const {
  if (!symbolic_)
    throw std::logic_error("symbolic energy requires exact (rational) coefficients");
  return *symbolic_;
}

SparsePoly CompiledEnergy::symbolic_gradient(int var) const {
  return symbolic().derivative(var);
}

CompiledEnergy build_energy(const EnergyParams& params) { return CompiledEnergy(params); }

double eval_energy(const CompiledEnergy& ce, const Vec12& x) { return ce.energy(x); }
Vec12 eval_gradient(const CompiledEnergy& ce, const Vec12& x) { return ce.gradient(x); }
Mat12 eval_hessian(const CompiledEnergy& ce, const Vec12& x) { return ce.hessian(x); }

std::vector<EigenCluster> hessian_spectrum_origin(const EnergyParams& params) {
  CompiledEnergy ce(params);
  return cluster_eigenvalues(ce.hessian_eigenvalues(Vec12{}));
}

std::vector<CheckResult> check_origin_spectrum(const EnergyParams& params) {
  CompiledEnergy ce(params);
  std::vector<double> got = ce.hessian_eigenvalues(Vec12{});
  std::vector<double> want;
  want.push_back(params.a.value / 6);
  for (int i = 0; i < 3; ++i) want.push_back(params.b.value / 10);
  for (int i = 0; i < 3; ++i) want.push_back(params.c.value / 10);
  for (int i = 0; i < 5; ++i) want.push_back(params.d.value / 30);
  std::sort(want.begin(), want.end());

  std::vector<CheckResult> out;
  for (int i = 0; i < 12; ++i) {
    double ref = std::max({std::fabs(want[i]), std::fabs(got[i]), 1e-30});
    bool ok = std::fabs(got[i] - want[i]) <= 1e-9 * ref;
    out.push_back({"origin Hessian eigenvalue " + std::to_string(i + 1), ok,
                   ok ? "" : "got " + std::to_string(got[i]) + ", want " +
                                 std::to_string(want[i])});
  }
  return out;
}

Vec12 apply_perm(const Permutation12& g, const Vec12& x) {
  Vec12 y{};
  for (int j = 0; j < kFaces; ++j) y[g(j)] = x[j];
  return y;
}

EquivarianceReport check_equivariance(const CompiledEnergy& ce, int samples,
                                      uint64_t seed) {
  const auto& group = IcosahedralGroup::instance();
  EquivarianceReport rep;
  for (int s = 0; s < samples; ++s) {
    UniformSampler rng(seed, static_cast<uint64_t>(s));
    Vec12 x{};
    for (double& xi : x) xi = rng.next_in(-1, 1);
    double ex = ce.energy(x);
    Vec12 gx = ce.gradient(x);
    for (int gi = 0; gi < group.size(); ++gi) {
      const Permutation12& g = group.element(gi);
      Vec12 gxv = apply_perm(g, x);
      rep.max_energy_deviation =
          std::max(rep.max_energy_deviation, std::fabs(ce.energy(gxv) - ex));
      Vec12 lhs = ce.gradient(gxv);
      Vec12 rhs = apply_perm(g, gx);
      for (int i = 0; i < kFaces; ++i)
        rep.max_gradient_deviation =
            std::max(rep.max_gradient_deviation, std::fabs(lhs[i] - rhs[i]));
    }
  }
  return rep;
}

}  // namespace icoflux
