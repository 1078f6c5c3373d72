#include "icoflux/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "icoflux/quad_field.hpp"

namespace icoflux {

namespace {

int worker_count(int jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("ICOFLUX_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = cap;
  }
  return std::max(1, std::min(n, jobs));
}

template <typename Fn>
void parallel_for(int jobs, Fn&& fn) {
  int workers = worker_count(jobs);
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < jobs; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

Q5Matrix FixedSubspace::embedding() const {
  Q5Matrix m(kFaces, dim);
  for (int f = 0; f < kFaces; ++f) m.at(f, class_of[f]) = 1;
  return m;
}

Vec12 FixedSubspace::embed(const std::vector<double>& t) const {
  if (static_cast<int>(t.size()) != dim)
    throw std::invalid_argument("FixedSubspace: wrong parameter count");
  Vec12 x{};
  for (int f = 0; f < kFaces; ++f) x[f] = t[class_of[f]];
  return x;
}

FixedSubspace fixed_subspace(const SubgroupSpec& subgroup) {
  // union-find over faces; generator cycles merge their members
  std::array<int, 12> parent;
  for (int i = 0; i < kFaces; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](int i, int j) { parent[find(i)] = find(j); };

  for (const auto& gen : subgroup.generator_perms)
    for (const auto& cyc : gen.cycles())
      for (std::size_t k = 1; k < cyc.size(); ++k)
        unite(cyc[0] - 1, cyc[k] - 1);

  FixedSubspace fix;
  fix.name = subgroup.name;
  std::array<int, 12> root_to_class;
  root_to_class.fill(-1);
  for (int f = 0; f < kFaces; ++f) {
    int r = find(f);
    if (root_to_class[r] < 0) {
      root_to_class[r] = fix.dim++;
      fix.classes.emplace_back();
    }
    fix.class_of[f] = root_to_class[r];
    fix.classes[fix.class_of[f]].push_back(f + 1);
  }
  return fix;
}

std::vector<SparsePoly> restricted_system(const FixedSubspace& fix,
                                          const CompiledEnergy& ce) {
  const Q5Matrix gamma = fix.embedding();
  std::vector<SparsePoly> eqs(fix.dim, SparsePoly(fix.dim));
  std::vector<bool> seen(fix.dim, false);
  for (int f = 0; f < kFaces; ++f) {
    SparsePoly comp = ce.symbolic_gradient(f).compose_linear(gamma);
    int cls = fix.class_of[f];
    if (!seen[cls]) {
      eqs[cls] = std::move(comp);
      seen[cls] = true;
    } else if (!(eqs[cls] == comp)) {
      throw std::logic_error(
          "restricted gradient components disagree inside a face class");
    }
  }
  return eqs;
}

std::string branch_label(BranchId id) {
  switch (id) {
    case BranchId::origin: return "origin";
    case BranchId::icosahedral: return "icosahedral";
    case BranchId::d10_first: return "D10:x1";
    case BranchId::d10_second: return "D10:x2";
    case BranchId::d6_first: return "D6:x3";
    case BranchId::d6_second: return "D6:x4";
  }
  throw std::invalid_argument("unknown branch");
}

namespace {

constexpr double kAdmissibleTol = 1e-12;

// 0-based faces carrying the second free variable of each pattern
const std::array<int, 2> kD10MinorFaces = {1, 7};               // faces 2 and 8
const std::array<int, 6> kD6MajorFaces = {0, 1, 5, 6, 7, 11};   // faces 1,2,6,7,8,12

Vec12 d10_point(double x, double y) {
  Vec12 v;
  v.fill(x);
  for (int f : kD10MinorFaces) v[f] = y;
  return v;
}

Vec12 d6_point(double x, double y) {
  Vec12 v;
  v.fill(y);
  for (int f : kD6MajorFaces) v[f] = x;
  return v;
}

void finish_admissibility(BranchReport& r) {
  double lo = *std::min_element(r.coords.begin(), r.coords.end());
  r.admissible = r.exists && lo >= -kAdmissibleTol;
  r.boundary = r.exists && std::fabs(lo) <= kAdmissibleTol;
}

std::vector<SpectrumTerm> common_d_spectrum(double a, double b, double c, double d,
                                            double four_fold) {
  return {{-d / 15, 1}, {-a / 3, 1}, {c / 10, 3}, {b / 10, 3}, {four_fold, 4}};
}

}  // namespace

std::vector<BranchReport> branch_solutions(const EnergyParams& params) {
  params.validate();
  const double a = params.a.value, b = params.b.value, c = params.c.value,
               d = params.d.value;
  const double c1 = params.c1.value, c4 = params.c4.value, c5 = params.c5.value;

  std::vector<BranchReport> out;

  {
    BranchReport r;
    r.id = BranchId::origin;
    r.exists = true;
    r.coords.fill(0);
    r.energy = 0;
    r.stable = a > 0 && b > 0 && c > 0 && d > 0;
    r.spectrum = {{a / 6, 1}, {b / 10, 3}, {c / 10, 3}, {d / 30, 5}};
    r.symmetry = "I";
    r.orbit_size = 1;
    finish_admissibility(r);
    out.push_back(r);
  }

  const bool neg_a = a < 0, neg_d = d < 0;
  const double sqrtA = neg_a ? std::sqrt(-a / (2 * c1)) : 0;

  {
    BranchReport r;
    r.id = BranchId::icosahedral;
    r.exists = neg_a;
    if (r.exists) {
      r.coords.fill(sqrtA);
      r.energy = -a * a / (4 * c1);
      r.stable = b > 0 && c > 0 && d > 0;
      r.spectrum = {{-a / 3, 1}, {b / 10, 3}, {c / 10, 3}, {d / 30, 5}};
    }
    r.symmetry = "I";
    r.orbit_size = 1;
    finish_admissibility(r);
    out.push_back(r);
  }

  // fivefold pair
  {
    const bool exists = neg_a && neg_d;
    const double sqrtB = neg_d ? std::sqrt(-d / (2 * c5)) : 0;
    const double four_fold = d / 1440 * (54 - 25 * c4 / c5);
    const bool stable = b > 0 && c > 0 && c4 > 54.0 / 25 * c5;
    const double energy = -(c5 * a * a + c1 * d * d) / (4 * c1 * c5);
    for (int variant = 0; variant < 2; ++variant) {
      BranchReport r;
      r.id = variant == 0 ? BranchId::d10_first : BranchId::d10_second;
      r.exists = exists;
      if (exists) {
        double sgn = variant == 0 ? 1 : -1;
        r.coords = d10_point(sqrtA + sgn * sqrtB, sqrtA - sgn * 5 * sqrtB);
        r.energy = energy;
        r.stable = stable;
        r.spectrum = common_d_spectrum(a, b, c, d, four_fold);
      }
      r.symmetry = "D10";
      r.orbit_size = 6;
      finish_admissibility(r);
      out.push_back(r);
    }
  }

  // threefold pair
  {
    const bool exists = neg_a && neg_d;
    const double s6 = neg_d ? 0.6 * std::sqrt(-15 * d / c4) : 0;
    const double four_fold = d / 1200 * (25 - 54 * c5 / c4);
    const bool stable = b > 0 && c > 0 && c5 > 25.0 / 54 * c4;
    const double energy = -(c4 * a * a + 54.0 / 25 * c1 * d * d) / (4 * c1 * c4);
    for (int variant = 0; variant < 2; ++variant) {
      BranchReport r;
      r.id = variant == 0 ? BranchId::d6_first : BranchId::d6_second;
      r.exists = exists;
      if (exists) {
        double sgn = variant == 0 ? 1 : -1;
        r.coords = d6_point(sqrtA + sgn * s6, sqrtA - sgn * s6);
        r.energy = energy;
        r.stable = stable;
        r.spectrum = common_d_spectrum(a, b, c, d, four_fold);
      }
      r.symmetry = "D6";
      r.orbit_size = 10;
      finish_admissibility(r);
      out.push_back(r);
    }
  }

  return out;
}

namespace {

Rational exact_or_throw(const ParamValue& v, const char* name) {
  if (!v.exact)
    throw std::invalid_argument(std::string("parameter ") + name +
                                " is not an exact rational");
  return *v.exact;
}

struct ExactParams {
  Rational a, b, c, d, c1, c2, c3, c4, c5;
};

ExactParams exact_params(const EnergyParams& p) {
  return {exact_or_throw(p.a, "a"),   exact_or_throw(p.b, "b"),
          exact_or_throw(p.c, "c"),   exact_or_throw(p.d, "d"),
          exact_or_throw(p.c1, "c1"), exact_or_throw(p.c2, "c2"),
          exact_or_throw(p.c3, "c3"), exact_or_throw(p.c4, "c4"),
          exact_or_throw(p.c5, "c5")};
}

Rational rational_coeff(const Q5Scalar& c) {
  if (!c.is_rational())
    throw std::logic_error("restricted system has an irrational coefficient");
  return c.rat;
}

// evaluates the restricted equations at a point of Q(sqrt A, sqrt B)
bool system_vanishes(const std::vector<SparsePoly>& eqs,
                     const std::vector<QuadExt>& point, const Rational& radA,
                     const Rational& radB) {
  for (const auto& eq : eqs) {
    QuadExt acc = eq.eval_ring<QuadExt>(
        point, QuadExt::rational(0, radA, radB), [&](const Q5Scalar& c) {
          return QuadExt::rational(rational_coeff(c), radA, radB);
        });
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool branch_is_exactly_stationary(BranchId id, const EnergyParams& params) {
  ExactParams p = exact_params(params);
  CompiledEnergy ce(params);

  switch (id) {
    case BranchId::origin: {
      for (int i = 0; i < kFaces; ++i) {
        Q5Vector zero(kFaces, Q5Scalar(0));
        if (!ce.symbolic_gradient(i).eval_exact(zero).is_zero()) return false;
      }
      return true;
    }
    case BranchId::icosahedral: {
      if (!(p.a < 0)) return false;
      Rational radA = -p.a / (2 * p.c1);
      auto fix = fixed_subspace(make_subgroup(SubgroupName::T));
      auto eqs = restricted_system(fix, ce);
      std::vector<QuadExt> pt = {QuadExt::sqrt_a(radA, 0)};
      return system_vanishes(eqs, pt, radA, 0);
    }
    case BranchId::d10_first:
    case BranchId::d10_second: {
      if (!(p.a < 0 && p.d < 0)) return false;
      Rational radA = -p.a / (2 * p.c1);
      Rational radB = -p.d / (2 * p.c5);
      auto fix = fixed_subspace(make_subgroup(SubgroupName::D10));
      auto eqs = restricted_system(fix, ce);
      QuadExt sA = QuadExt::sqrt_a(radA, radB);
      QuadExt sB = QuadExt::sqrt_b(radA, radB);
      Rational sgn = id == BranchId::d10_first ? 1 : -1;
      // class order: variable 0 carries face 1 (the ten-face class), 1 carries face 2
      QuadExt x = sA + sB.scaled(sgn);
      QuadExt y = sA - sB.scaled(5 * sgn);
      return system_vanishes(eqs, {x, y}, radA, radB);
    }
    case BranchId::d6_first:
    case BranchId::d6_second: {
      if (!(p.a < 0 && p.d < 0)) return false;
      Rational radA = -p.a / (2 * p.c1);
      Rational radB = Rational(27) * -p.d / (5 * p.c4);  // (3/5)^2 * 15 * (-d)/c4
      auto fix = fixed_subspace(make_subgroup(SubgroupName::D6));
      auto eqs = restricted_system(fix, ce);
      QuadExt sA = QuadExt::sqrt_a(radA, radB);
      QuadExt sB = QuadExt::sqrt_b(radA, radB);
      Rational sgn = id == BranchId::d6_first ? 1 : -1;
      QuadExt x = sA + sB.scaled(sgn);
      QuadExt y = sA - sB.scaled(sgn);
      return system_vanishes(eqs, {x, y}, radA, radB);
    }
  }
  throw std::invalid_argument("unknown branch");
}

Rational branch_energy_exact(BranchId id, const EnergyParams& params) {
  ExactParams p = exact_params(params);
  switch (id) {
    case BranchId::origin:
      return 0;
    case BranchId::icosahedral:
      return -p.a * p.a / (4 * p.c1);
    case BranchId::d10_first:
    case BranchId::d10_second:
      return -(p.c5 * p.a * p.a + p.c1 * p.d * p.d) / (4 * p.c1 * p.c5);
    case BranchId::d6_first:
    case BranchId::d6_second:
      return -(p.c4 * p.a * p.a + Rational(54, 25) * p.c1 * p.d * p.d) /
             (4 * p.c1 * p.c4);
  }
  throw std::invalid_argument("unknown branch");
}

CriticalPoint classify_point(const Vec12& x, const CompiledEnergy& ce) {
  CriticalPoint cp;
  cp.coords = x;
  cp.grad_norm = max_abs(ce.gradient(x));
  if (cp.grad_norm > 1e-6)
    throw std::invalid_argument("classify_point: gradient too large: " +
                                std::to_string(cp.grad_norm));
  cp.energy = ce.energy(x);
  cp.eigenvalues = ce.hessian_eigenvalues(x);
  cp.stable = cp.eigenvalues.front() > 1e-9;
  cp.admissible = *std::min_element(x.begin(), x.end()) >= -1e-12;

  // stabilizer among the 60 rotations, with closure verified
  const auto& group = IcosahedralGroup::instance();
  std::vector<int> stab;
  constexpr double kIsoTol = 1e-9;
  for (int gi = 0; gi < group.size(); ++gi) {
    const Permutation12& g = group.element(gi);
    bool fixes = true;
    for (int j = 0; j < kFaces && fixes; ++j)
      if (std::fabs(x[g(j)] - x[j]) > kIsoTol) fixes = false;
    if (fixes) stab.push_back(gi);
  }
  cp.isotropy_order = static_cast<int>(stab.size());

  bool closed = true;
  {
    std::vector<bool> in_stab(group.size(), false);
    for (int gi : stab) in_stab[gi] = true;
    for (int gi : stab) {
      for (int hj : stab) {
        Permutation12 prod = group.element(gi) * group.element(hj);
        if (!in_stab[group.index_of(prod)]) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
  }
  if (!closed) {
    cp.isotropy = "other";
  } else {
    switch (cp.isotropy_order) {
      case 60: cp.isotropy = "I"; break;
      case 12: cp.isotropy = "T"; break;
      case 10: cp.isotropy = "D10"; break;
      case 6: cp.isotropy = "D6"; break;
      case 5: cp.isotropy = "Z5"; break;
      case 4: cp.isotropy = "D4"; break;
      case 3: cp.isotropy = "Z3"; break;
      case 2: cp.isotropy = "Z2"; break;
      case 1: cp.isotropy = "trivial"; break;
      default: cp.isotropy = "other"; break;
    }
  }
  return cp;
}

std::vector<Vec12> orbit(const Vec12& x) {
  const auto& group = IcosahedralGroup::instance();
  std::vector<Vec12> pts;
  for (int gi = 0; gi < group.size(); ++gi) {
    Vec12 y = apply_perm(group.element(gi), x);
    bool dup = false;
    for (const auto& p : pts) {
      double dist = 0;
      for (int i = 0; i < kFaces; ++i) dist = std::max(dist, std::fabs(p[i] - y[i]));
      if (dist <= 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) pts.push_back(y);
  }
  return pts;
}

namespace {

struct DescentResult {
  Vec12 x{};
  double grad_norm = 0;
  bool converged = false;
};

DescentResult descend(const CompiledEnergy& ce, Vec12 x, int max_gd_iters) {
  double e = ce.energy(x);
  Vec12 g = ce.gradient(x);
  double step = 0.1;

  for (int it = 0; it < max_gd_iters; ++it) {
    double gn = max_abs(g);
    if (gn < 1e-5) break;
    double g2 = 0;
    for (double v : g) g2 += v * v;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      Vec12 xn;
      for (int i = 0; i < kFaces; ++i) xn[i] = x[i] - step * g[i];
      double en = ce.energy(xn);
      if (en <= e - 1e-4 * step * g2) {
        x = xn;
        e = en;
        g = ce.gradient(x);
        step = std::min(step * 1.5, 1e3);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // line search stalled at machine precision
  }

  // Newton polish: damped steps, monotone in the gradient norm. Quadratic
  // convergence pushes the point close enough to the exact stationary point
  // that the 1e-9 isotropy test reads the true symmetry even across the
  // ill-conditioned 4-fold directions.
  for (int it = 0; it < 60; ++it) {
    g = ce.gradient(x);
    double gn = max_abs(g);
    if (gn < 1e-13) break;
    Mat12 h = ce.hessian(x);
    Vec12 rhs;
    for (int i = 0; i < kFaces; ++i) rhs[i] = -g[i];
    auto delta = lu_solve(h, rhs);
    if (!delta) break;
    bool accepted = false;
    double lambda = 1.0;
    for (int k = 0; k < 8; ++k) {
      Vec12 xn;
      for (int i = 0; i < kFaces; ++i) xn[i] = x[i] + lambda * (*delta)[i];
      if (max_abs(ce.gradient(xn)) < gn) {
        x = xn;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) break;
  }

  DescentResult r;
  r.x = x;
  r.grad_norm = max_abs(ce.gradient(x));
  r.converged = r.grad_norm <= 1e-8;
  return r;
}

}  // namespace

MinimizeResult minimize_restarts(const CompiledEnergy& ce, const MinimizeOptions& opt) {
  if (opt.n_starts < 1) throw std::invalid_argument("minimize_restarts: n_starts >= 1");

  double box = opt.box;
  if (box <= 0) {
    double amp = 0;
    for (const auto& b : branch_solutions(ce.params()))
      if (b.exists)
        for (double v : b.coords) amp = std::max(amp, std::fabs(v));
    box = amp > 0 ? 3 * amp : 5.0;
  }

  std::vector<DescentResult> results(opt.n_starts);
  parallel_for(opt.n_starts, [&](int s) {
    UniformSampler rng(opt.seed, static_cast<uint64_t>(s));
    Vec12 x0;
    for (int i = 0; i < kFaces; ++i) x0[i] = rng.next_in(-box, box);
    results[s] = descend(ce, x0, opt.max_gd_iters);
  });

  MinimizeResult out;
  std::vector<Vec12> unique;
  for (const auto& r : results) {
    if (!r.converged) {
      ++out.dropped;
      continue;
    }
    bool dup = false;
    for (const auto& u : unique) {
      double dist = 0;
      for (int i = 0; i < kFaces; ++i) dist = std::max(dist, std::fabs(u[i] - r.x[i]));
      if (dist <= 1e-5) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      unique.push_back(r.x);
      out.points.push_back(classify_point(r.x, ce));
    }
  }
  return out;
}

std::string phase_label(const std::vector<BranchReport>& branches) {
  std::string label;
  for (const auto& b : branches) {
    if (!(b.exists && b.stable && b.admissible)) continue;
    std::string part = b.id == BranchId::origin ? "closed" : branch_label(b.id);
    if (!label.empty()) label += "+";
    label += part;
  }
  return label.empty() ? "none" : label;
}

int closed_form_minima_count(const std::vector<BranchReport>& branches) {
  int n = 0;
  for (const auto& b : branches)
    if (b.exists && b.stable && b.admissible) n += b.orbit_size;
  return n;
}

std::vector<PhaseCell> scan_phase_diagram(const ScanGrid& grid,
                                          const EnergyParams& base,
                                          int verify_restarts, uint64_t seed) {
  if (!(base.b.value > 0) || !(base.c.value > 0))
    throw std::invalid_argument("scan requires b > 0 and c > 0");
  base.validate();

  std::vector<double> a_values, d_values;
  for (double a = grid.a_lo; a <= grid.a_hi + grid.a_step * 1e-9; a += grid.a_step)
    a_values.push_back(a);
  for (double d = grid.d_lo; d <= grid.d_hi + grid.d_step * 1e-9; d += grid.d_step)
    d_values.push_back(d);

  int n_cells = static_cast<int>(a_values.size() * d_values.size());
  std::vector<PhaseCell> cells(n_cells);
  parallel_for(n_cells, [&](int idx) {
    double a = a_values[idx / d_values.size()];
    double d = d_values[idx % d_values.size()];
    EnergyParams p = base;
    p.a = ParamValue::from_double(a);
    p.d = ParamValue::from_double(d);
    auto branches = branch_solutions(p);
    PhaseCell cell;
    cell.a = a;
    cell.d = d;
    cell.label = phase_label(branches);
    cell.n_minima_closed = closed_form_minima_count(branches);
    if (verify_restarts > 0) {
      CompiledEnergy ce(p);
      MinimizeOptions opt;
      opt.n_starts = verify_restarts;
      opt.seed = seed ^ (static_cast<uint64_t>(idx) << 20);
      MinimizeResult res = minimize_restarts(ce, opt);
      int n = 0;
      for (const auto& cp : res.points)
        if (cp.stable && cp.admissible) ++n;
      cell.n_minima_numeric = n;
    }
    cells[idx] = std::move(cell);
  });
  return cells;
}

}  // namespace icoflux
