#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "icoflux/canonical.hpp"
#include "icoflux/numeric.hpp"
#include "icoflux/q5_matrix.hpp"
#include "icoflux/sparse_poly.hpp"

using namespace icoflux;

namespace {

Q5Scalar random_q5(UniformSampler& rng) {
  auto small = [&] {
    int num = static_cast<int>(rng.next_in(-6, 7));
    int den = 1 + static_cast<int>(rng.next_in(0, 4));
    return Rational(num, den);
  };
  return {small(), small()};
}

SparsePoly random_poly(UniformSampler& rng, int nvars, int max_degree) {
  SparsePoly p(nvars);
  for (int deg = 0; deg <= max_degree; ++deg)
    for (const auto& m : monomials_of_degree(nvars, deg))
      if (rng.next() < 0.4) p.add_term(m, random_q5(rng));
  return p;
}

Q5Matrix random_invertible(UniformSampler& rng, int n) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Q5Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = Q5Scalar(Rational(static_cast<int>(rng.next_in(-3, 4))));
    if (m.rank() == n) return m;
  }
  return Q5Matrix::identity(n);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-8") == Rational(-8));
  CHECK(*parse_rational("1e2") == Rational(100));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational("1.2.3"));
  CHECK(!parse_rational(""));
}

TEST_CASE("golden ratio identities") {
  const Q5Scalar tau = Q5Scalar::tau();
  CHECK(tau * tau == tau + Q5Scalar(1));
  CHECK(tau * tau == Q5Scalar(Rational(3, 2), Rational(1, 2)));
  CHECK(Q5Scalar::sqrt5() * Q5Scalar::sqrt5() == Q5Scalar(5));
  CHECK(tau + (Q5Scalar(1) - tau) == Q5Scalar(1));
}

TEST_CASE("q5 division") {
  Q5Scalar tau = Q5Scalar::tau();
  CHECK(tau / tau == Q5Scalar(1));
  CHECK_THROWS_AS(tau / Q5Scalar(0), std::domain_error);
  // 1/tau = tau - 1
  CHECK(Q5Scalar(1) / tau == tau - Q5Scalar(1));
}

TEST_CASE("q5 field axioms on random triples") {
  UniformSampler rng(101, 0);
  for (int trial = 0; trial < 200; ++trial) {
    Q5Scalar a = random_q5(rng), b = random_q5(rng), c = random_q5(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Q5Scalar(1));
  }
}

TEST_CASE("q5 canonical strings") {
  CHECK(Q5Scalar(Rational(3, 2)).str() == "3/2");
  CHECK(Q5Scalar(Rational(0), Rational(2, 5)).str() == "2/5*sqrt5");
  CHECK(Q5Scalar::tau().str() == "1/2+1/2*sqrt5");
  CHECK((Q5Scalar(1) - Q5Scalar::tau()).str() == "1/2-1/2*sqrt5");
  CHECK(Q5Scalar(0).str() == "0");
  CHECK(Q5Scalar(Rational(0), Rational(-1)).str() == "-sqrt5");
}

TEST_CASE("matrix rank and inverse") {
  CHECK(Q5Matrix::identity(12).rank() == 12);
  CHECK(canonical_P().rank() == 12);
  CHECK(canonical_P_inverse() * canonical_P() == Q5Matrix::identity(12));

  Q5Matrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 2;
  singular.at(1, 0) = 2;
  singular.at(1, 1) = 4;
  CHECK(singular.rank() == 1);
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("compose_linear basics") {
  SparsePoly x1sq = SparsePoly::variable(3, 0) * SparsePoly::variable(3, 0);
  CHECK(x1sq.compose_linear(Q5Matrix::identity(3)) == x1sq);

  SparsePoly x1 = SparsePoly::variable(3, 0);
  CHECK(x1.compose_linear(Q5Matrix::identity(3).scaled(Q5Scalar(2))) ==
        x1.scaled(Q5Scalar(2)));

  // canonical p21_2 is fixed by the canonical rho2(g5) block
  const SparsePoly& q2 = block_invariant(2, 2, 1);
  CHECK(q2.compose_linear(irrep_generator_matrix(2, 5)) == q2);

  CHECK_THROWS_AS(x1.compose_linear(Q5Matrix::identity(4)), std::invalid_argument);
}

TEST_CASE("compose_linear composes with matrix products") {
  UniformSampler rng(7, 0);
  for (int trial = 0; trial < 10; ++trial) {
    SparsePoly p = random_poly(rng, 3, 3);
    Q5Matrix m = random_invertible(rng, 3), n = random_invertible(rng, 3);
    CHECK(p.compose_linear(m).compose_linear(n) == p.compose_linear(m * n));
  }
}

TEST_CASE("eval agrees with exact composition") {
  UniformSampler rng(13, 0);
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly p = random_poly(rng, 4, 3);
    Q5Matrix m = random_invertible(rng, 4);
    std::vector<double> x(4);
    for (auto& v : x) v = rng.next_in(-1, 1);
    std::vector<double> mx(4, 0.0);
    auto md = m.to_double();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) mx[i] += md[i][j] * x[j];
    CHECK(std::fabs(p.compose_linear(m).eval(x) - p.eval(mx)) <= 1e-12 *
              std::max(1.0, std::fabs(p.eval(mx))));
  }
}

TEST_CASE("poly eval examples") {
  SparsePoly x1sq = SparsePoly::variable(1, 0).pow(2);
  CHECK(x1sq.eval({3.0}) == doctest::Approx(9.0));

  // canonical quadratic of the 5-dim block at the all-ones point
  CHECK(block_invariant(5, 2, 1).eval({1, 1, 1, 1, 1}) == doctest::Approx(1.0).epsilon(1e-14));

  SparsePoly with_const = SparsePoly::constant(2, Q5Scalar(Rational(7, 2))) +
                          SparsePoly::variable(2, 0);
  CHECK(with_const.eval({0.0, 0.0}) == doctest::Approx(3.5));
}

TEST_CASE("derivatives") {
  // d/dx (x^2 y) = 2 x y
  SparsePoly p = SparsePoly::variable(2, 0).pow(2) * SparsePoly::variable(2, 1);
  SparsePoly dx = p.derivative(0);
  SparsePoly expect =
      (SparsePoly::variable(2, 0) * SparsePoly::variable(2, 1)).scaled(Q5Scalar(2));
  CHECK(dx == expect);
  CHECK(p.derivative(0).derivative(1) == SparsePoly::variable(2, 0).scaled(Q5Scalar(2)));
}

TEST_CASE("canonical polynomial serialization") {
  CHECK(block_invariant(2, 2, 1).str({"x", "y", "z"}) ==
        "x^2 - 2/5*sqrt5*x*y + 2/5*sqrt5*x*z + y^2 + 2/5*sqrt5*y*z + z^2");
  CHECK(block_invariant(3, 2, 1).str({"x", "y", "z"}) ==
        "x^2 - 2/5*sqrt5*x*y + 2/5*sqrt5*x*z + y^2 - 2/5*sqrt5*y*z + z^2");
  CHECK(SparsePoly(3).str() == "0");
}

TEST_CASE("zero coefficients are never stored") {
  SparsePoly p(2);
  Monomial m(2);
  m.exps[0] = 1;
  p.add_term(m, Q5Scalar(1));
  p.add_term(m, Q5Scalar(-1));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}
