#pragma once

#include <map>
#include <string>
#include <vector>

#include "icoflux/monomial.hpp"
#include "icoflux/q5.hpp"
#include "icoflux/q5_matrix.hpp"

namespace icoflux {

// Multivariate polynomial with exact Q(sqrt 5) coefficients. Terms are held in
// descending graded-lex order; zero coefficients are never stored, so equality
// is structural.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Q5Scalar, GrlexDescending>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Q5Scalar& c);
  static SparsePoly variable(int nvars, int index);
  static SparsePoly term(const Monomial& m, const Q5Scalar& c);

  int nvars() const { return nvars_; }
  int degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Q5Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Q5Scalar& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Q5Scalar& s) const;
  SparsePoly pow(int k) const;

  // Partial derivative with respect to variable i.
  SparsePoly derivative(int var) const;

  // q with q(x) = p(Mx). M must have nvars() rows; q has M.cols() variables.
  SparsePoly compose_linear(const Q5Matrix& m) const;

  double eval(const std::vector<double>& x) const;
  Q5Scalar eval_exact(const Q5Vector& x) const;

  // Evaluation over any commutative ring R; coeff_fn maps Q5Scalar -> R.
  template <typename R, typename CoeffFn>
  R eval_ring(const std::vector<R>& x, R acc_zero, CoeffFn coeff_fn) const {
    R acc = acc_zero;
    for (const auto& [mono, coef] : terms_) {
      R t = coeff_fn(coef);
      for (int v = 0; v < nvars_; ++v)
        for (int e = 0; e < mono.exps[v]; ++e) t = t * x[v];
      acc = acc + t;
    }
    return acc;
  }

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Canonical text: terms in monomial order, coefficients as r+s*sqrt5.
  std::string str(std::vector<std::string> names = {}) const;

  // Coefficients listed against a fixed monomial enumeration (for rank tests).
  Q5Vector coeff_vector(const std::vector<Monomial>& basis) const;

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace icoflux
