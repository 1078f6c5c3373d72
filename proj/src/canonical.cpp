#include "icoflux/canonical.hpp"

#include <stdexcept>

namespace icoflux {

namespace {

// rational parts and sqrt5 coefficients of the canonical P, row by row
constexpr int kPRat[12][12] = {
    {1, -1, 0, 1, 0, -1, 1, 1, 1, 1, -5, 1},
    {1, -1, 1, 1, -1, 0, -1, 1, 1, 1, 1, -5},
    {1, -1, -1, -1, 1, -1, 0, 1, 1, 1, 1, 1},
    {1, -1, -1, 0, 1, 1, -1, -5, 1, 1, 1, 1},
    {1, -1, 1, -1, -1, 1, 1, 1, -5, 1, 1, 1},
    {1, 0, 1, -1, -1, -1, -1, 1, 1, -5, 1, 1},
    {1, 1, 0, -1, 0, 1, -1, 1, 1, 1, -5, 1},
    {1, 1, -1, -1, 1, 0, 1, 1, 1, 1, 1, -5},
    {1, 1, 1, 1, -1, 1, 0, 1, 1, 1, 1, 1},
    {1, 1, 1, 0, -1, -1, 1, -5, 1, 1, 1, 1},
    {1, 1, -1, 1, 1, -1, -1, 1, -5, 1, 1, 1},
    {1, 0, -1, 1, 1, 1, 1, 1, 1, -5, 1, 1},
};
constexpr int kPSqrt5[12][12] = {
    {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

Q5Matrix build_P() {
  Q5Matrix p(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      p.at(i, j) = Q5Scalar(Rational(kPRat[i][j]), Rational(kPSqrt5[i][j]));
  return p;
}

using Entry = Q5Scalar;

Q5Matrix from_entries(int n, const std::vector<Entry>& entries) {
  Q5Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entries[static_cast<std::size_t>(i) * n + j];
  return m;
}

struct IrrepGenerators {
  Q5Matrix g2, g5;
};

IrrepGenerators build_irrep(int irrep) {
  const Q5Scalar t = Q5Scalar::tau();
  const Q5Scalar mt = -t;                 // -tau
  const Q5Scalar omt = Q5Scalar(1) - t;   // 1 - tau
  const Q5Scalar tm1 = t - Q5Scalar(1);   // tau - 1
  switch (irrep) {
    case 1:
      return {from_entries(1, {1}), from_entries(1, {1})};
    case 2:
      return {from_entries(3, {0, -1, 0,
                               -1, 0, 0,
                               0, 0, -1}),
              from_entries(3, {1, mt, -1,
                               0, -1, mt,
                               0, t, t})};
    case 3:
      return {from_entries(3, {omt, omt, 0,
                               -1, tm1, 0,
                               omt, 1, -1}),
              from_entries(3, {0, 0, 1,
                               1, 0, tm1,
                               0, 1, omt})};
    case 5:
      return {from_entries(5, {1, 0, 0, 0, 0,
                               0, 0, 0, 0, 1,
                               0, 0, 0, 1, 0,
                               0, 0, 1, 0, 0,
                               0, 1, 0, 0, 0}),
              from_entries(5, {0, 0, 0, 0, -1,
                               1, 0, 0, 0, -1,
                               0, 0, 1, 0, -1,
                               0, 1, 0, 0, -1,
                               0, 0, 0, 1, -1})};
    default:
      throw std::invalid_argument("irrep must be one of 1, 2, 3, 5");
  }
}

// ---- block invariant polynomials ----

SparsePoly quadratic_dim3(bool plus_yz) {
  // x^2 + y^2 + z^2 + (2 sqrt5 / 5)(xz +/- yz - xy)
  SparsePoly p(3);
  const Q5Scalar w(Rational(0), Rational(2, 5));
  for (int i = 0; i < 3; ++i) {
    Monomial sq(3);
    sq.exps[i] = 2;
    p.add_term(sq, 1);
  }
  Monomial xy(3), xz(3), yz(3);
  xy.exps = {1, 1, 0};
  xz.exps = {1, 0, 1};
  yz.exps = {0, 1, 1};
  p.add_term(xz, w);
  p.add_term(yz, plus_yz ? w : -w);
  p.add_term(xy, -w);
  return p;
}

SparsePoly quadratic_dim5() {
  // sum v_i^2 - (2/5) sum_{i<j} v_i v_j
  SparsePoly p(5);
  const Q5Scalar w(Rational(-2, 5));
  for (int i = 0; i < 5; ++i) {
    Monomial m(5);
    m.exps[i] = 2;
    p.add_term(m, 1);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Monomial m(5);
      m.exps[i] = m.exps[j] = 1;
      p.add_term(m, w);
    }
  return p;
}

SparsePoly cubic_alternating_dim5() {
  // xyz - xyt - xzt + yzt + xyu - xzu - yzu + xtu - ytu + ztu
  struct T { int i, j, k, sign; };
  const T terms[] = {{0, 1, 2, +1}, {0, 1, 3, -1}, {0, 2, 3, -1}, {1, 2, 3, +1},
                     {0, 1, 4, +1}, {0, 2, 4, -1}, {1, 2, 4, -1}, {0, 3, 4, +1},
                     {1, 3, 4, -1}, {2, 3, 4, +1}};
  SparsePoly p(5);
  for (const auto& t : terms) {
    Monomial m(5);
    m.exps[t.i] = m.exps[t.j] = m.exps[t.k] = 1;
    p.add_term(m, t.sign);
  }
  return p;
}

SparsePoly cubic_power_dim5() {
  // sum v^3 + (6/5)(xyt + xzt + xzu + yzu + ytu) - (3/5) sum_{i != j} v_i^2 v_j
  SparsePoly p(5);
  for (int i = 0; i < 5; ++i) {
    Monomial m(5);
    m.exps[i] = 3;
    p.add_term(m, 1);
  }
  const int triples[5][3] = {{0, 1, 3}, {0, 2, 3}, {0, 2, 4}, {1, 2, 4}, {1, 3, 4}};
  for (const auto& t : triples) {
    Monomial m(5);
    m.exps[t[0]] = m.exps[t[1]] = m.exps[t[2]] = 1;
    p.add_term(m, Q5Scalar(Rational(6, 5)));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      Monomial m(5);
      m.exps[i] = 2;
      m.exps[j] = 1;
      p.add_term(m, Q5Scalar(Rational(-3, 5)));
    }
  return p;
}

void add_square_pair_products(SparsePoly& p, const Q5Scalar& w) {
  // w * sum_{i; j<k; j,k != i} v_i^2 v_j v_k
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        if (j == i || k == i) continue;
        Monomial m(5);
        m.exps[i] = 2;
        m.exps[j] += 1;
        m.exps[k] += 1;
        p.add_term(m, w);
      }
}

void add_quartets(SparsePoly& p, const Q5Scalar& w) {
  for (int skip = 0; skip < 5; ++skip) {
    Monomial m(5);
    for (int i = 0; i < 5; ++i)
      if (i != skip) m.exps[i] = 1;
    p.add_term(m, w);
  }
}

SparsePoly quartic_pairs_dim5() {
  // sum_{i<j} v_i^2 v_j^2 + sum quartets - (1/2) sum v_i^2 v_j v_k
  SparsePoly p(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Monomial m(5);
      m.exps[i] = m.exps[j] = 2;
      p.add_term(m, 1);
    }
  add_quartets(p, Q5Scalar(1));
  add_square_pair_products(p, Q5Scalar(Rational(-1, 2)));
  return p;
}

SparsePoly quartic_powers_dim5() {
  // sum v^4 - (4/5) sum_{i != j} v_i^3 v_j + (3/5) sum v_i^2 v_j v_k - (6/5) quartets
  SparsePoly p(5);
  for (int i = 0; i < 5; ++i) {
    Monomial m(5);
    m.exps[i] = 4;
    p.add_term(m, 1);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      Monomial m(5);
      m.exps[i] = 3;
      m.exps[j] = 1;
      p.add_term(m, Q5Scalar(Rational(-4, 5)));
    }
  add_square_pair_products(p, Q5Scalar(Rational(3, 5)));
  add_quartets(p, Q5Scalar(Rational(-6, 5)));
  return p;
}

std::vector<BlockInvariant> build_block_invariants() {
  std::vector<BlockInvariant> all;
  SparsePoly q2 = quadratic_dim3(true);
  SparsePoly q3 = quadratic_dim3(false);
  all.push_back({2, 2, 1, q2});
  all.push_back({2, 4, 1, q2 * q2});
  all.push_back({3, 2, 1, q3});
  all.push_back({3, 4, 1, q3 * q3});
  all.push_back({5, 2, 1, quadratic_dim5()});
  all.push_back({5, 3, 1, cubic_alternating_dim5()});
  all.push_back({5, 3, 2, cubic_power_dim5()});
  all.push_back({5, 4, 1, quartic_pairs_dim5()});
  all.push_back({5, 4, 2, quartic_powers_dim5()});
  return all;
}

}  // namespace

const Q5Matrix& canonical_P() {
  static const Q5Matrix p = build_P();
  return p;
}

const Q5Matrix& canonical_P_inverse() {
  static const Q5Matrix pinv = canonical_P().inverse();
  return pinv;
}

int block_slot(int irrep) {
  switch (irrep) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 2;
    case 5: return 3;
    default: throw std::invalid_argument("irrep must be one of 1, 2, 3, 5");
  }
}

const Q5Matrix& irrep_generator_matrix(int irrep, int which) {
  static const std::array<IrrepGenerators, 4> gens = {
      build_irrep(1), build_irrep(2), build_irrep(3), build_irrep(5)};
  const auto& pair = gens[block_slot(irrep)];
  if (which == 2) return pair.g2;
  if (which == 5) return pair.g5;
  throw std::invalid_argument("generator selector must be 2 or 5");
}

const std::vector<BlockInvariant>& block_invariants() {
  static const std::vector<BlockInvariant> all = build_block_invariants();
  return all;
}

const SparsePoly& block_invariant(int irrep, int degree, int index) {
  for (const auto& b : block_invariants())
    if (b.irrep == irrep && b.degree == degree && b.index == index) return b.poly;
  throw std::invalid_argument("no canonical invariant with that (irrep, degree, index)");
}

SparsePoly power_invariant(int degree) {
  Monomial m(1);
  m.exps[0] = static_cast<uint16_t>(degree);
  return SparsePoly::term(m, 1);
}

}  // namespace icoflux
