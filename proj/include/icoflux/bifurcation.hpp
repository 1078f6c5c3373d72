#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icoflux/energy.hpp"
#include "icoflux/group.hpp"
#include "icoflux/numeric.hpp"

namespace icoflux {

// Fixed subspace of a subgroup: faces sharing a generator cycle share a free
// variable. dim and the face pattern reproduce the fixed-space table.
struct FixedSubspace {
  SubgroupName name;
  int dim = 0;
  std::array<int, 12> class_of{};          // face (0-based) -> free variable
  std::vector<std::vector<int>> classes;   // 1-based faces per free variable

  // 12 x dim 0/1 matrix gamma with x = gamma(t)
  Q5Matrix embedding() const;
  Vec12 embed(const std::vector<double>& t) const;
};

FixedSubspace fixed_subspace(const SubgroupSpec& subgroup);

// Gradient composed with the parametrization gamma, reduced to the dim
// distinct component polynomials (one per face class, in class order).
// Requires exact coefficients; throws std::logic_error otherwise or if the
// components within one face class fail to agree symbolically.
std::vector<SparsePoly> restricted_system(const FixedSubspace& fix,
                                          const CompiledEnergy& ce);

enum class BranchId {
  origin,
  icosahedral,
  d10_first,
  d10_second,
  d6_first,
  d6_second,
};
std::string branch_label(BranchId id);

struct SpectrumTerm {
  double value = 0;
  int multiplicity = 0;
};

struct BranchReport {
  BranchId id{};
  bool exists = false;
  bool admissible = false;   // all closed-form components >= -1e-12
  bool boundary = false;     // some component vanishes (within 1e-12)
  bool stable = false;
  Vec12 coords{};            // closed form; zero when !exists
  double energy = 0;         // closed-form value
  std::vector<SpectrumTerm> spectrum;  // closed-form eigenvalues
  std::string symmetry;      // isotropy label of the branch
  int orbit_size = 0;        // |G| / |isotropy|
};

std::vector<BranchReport> branch_solutions(const EnergyParams& params);

// Exact certificate: for rational parameters, evaluates the restricted
// stationarity equations at the closed-form point inside Q(sqrt A, sqrt B)
// and reports whether every equation is identically zero.
bool branch_is_exactly_stationary(BranchId id, const EnergyParams& params);

// Exact closed-form energy at the branch point (rational parameters only).
Rational branch_energy_exact(BranchId id, const EnergyParams& params);

struct CriticalPoint {
  Vec12 coords{};
  double energy = 0;
  double grad_norm = 0;                // ||grad E||_inf at coords
  std::vector<double> eigenvalues;     // sorted ascending
  std::string isotropy;                // "I", "T", "D10", ..., "trivial", "other"
  int isotropy_order = 0;
  bool stable = false;                 // all eigenvalues > 1e-9
  bool admissible = false;             // all components >= -1e-12
};

// Requires ||grad||_inf <= 1e-6 (throws std::invalid_argument otherwise).
CriticalPoint classify_point(const Vec12& x, const CompiledEnergy& ce);

// {rho(g) x : g in G}, deduplicated at 1e-9 in the max norm.
std::vector<Vec12> orbit(const Vec12& x);

struct MinimizeOptions {
  int n_starts = 100;
  uint64_t seed = 0;
  double box = 0;          // sampling half-width; 0 = 3x max branch amplitude, floor 5
  int max_gd_iters = 4000;
};

struct MinimizeResult {
  std::vector<CriticalPoint> points;  // deduplicated at 1e-5, deterministic order
  int dropped = 0;                    // starts that failed to converge
};

MinimizeResult minimize_restarts(const CompiledEnergy& ce, const MinimizeOptions& opt);

struct PhaseCell {
  double a = 0, d = 0;
  std::string label;          // "closed", "icosahedral", "D10(x1+x2)", ...
  int n_minima_closed = 0;    // admissible stable minima counted with orbits
  int n_minima_numeric = -1;  // -1 when restart verification was off
};

struct ScanGrid {
  double a_lo = 0, a_hi = 0, a_step = 1;
  double d_lo = 0, d_hi = 0, d_step = 1;
};

// Labels every (a, d) cell by its set of admissible stable phases. b, c and
// c1..c5 are taken from base; b, c must be positive. Cells run in parallel
// (ICOFLUX_THREADS caps workers) and merge in grid order.
std::vector<PhaseCell> scan_phase_diagram(const ScanGrid& grid,
                                          const EnergyParams& base,
                                          int verify_restarts = 0,
                                          uint64_t seed = 0);

// Stable admissible phase set -> cell label (shared by scan and tests).
std::string phase_label(const std::vector<BranchReport>& branches);
int closed_form_minima_count(const std::vector<BranchReport>& branches);

}  // namespace icoflux
