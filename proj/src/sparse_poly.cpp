#include "icoflux/sparse_poly.hpp"

#include <stdexcept>

namespace icoflux {

SparsePoly SparsePoly::constant(int nvars, const Q5Scalar& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  SparsePoly p(nvars);
  Monomial m(nvars);
  m.exps[index] = 1;
  p.add_term(m, 1);
  return p;
}

SparsePoly SparsePoly::term(const Monomial& m, const Q5Scalar& c) {
  SparsePoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Q5Scalar SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q5Scalar() : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Q5Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: nvars mismatch");
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: nvars mismatch");
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: nvars mismatch");
  SparsePoly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::scaled(const Q5Scalar& s) const {
  SparsePoly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

SparsePoly SparsePoly::pow(int k) const {
  SparsePoly r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) continue;
    Monomial d = m;
    int e = d.exps[var]--;
    r.add_term(d, c * Q5Scalar(e));
  }
  return r;
}

SparsePoly SparsePoly::compose_linear(const Q5Matrix& m) const {
  if (m.rows() != nvars_)
    throw std::invalid_argument("SparsePoly: substitution matrix has wrong row count");
  int out_vars = m.cols();

  // linear form for each original variable, with cached powers
  std::vector<SparsePoly> forms;
  forms.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    SparsePoly li(out_vars);
    for (int j = 0; j < out_vars; ++j) {
      if (m.at(i, j).is_zero()) continue;
      Monomial mv(out_vars);
      mv.exps[j] = 1;
      li.add_term(mv, m.at(i, j));
    }
    forms.push_back(std::move(li));
  }
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  auto power_of = [&](int var, int e) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(out_vars, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * forms[var]);
    return cache[e];
  };

  SparsePoly result(out_vars);
  for (const auto& [mono, coef] : terms_) {
    SparsePoly t = constant(out_vars, coef);
    for (int v = 0; v < nvars_; ++v)
      if (mono.exps[v] > 0) t = t * power_of(v, mono.exps[v]);
    result = result + t;
  }
  return result;
}

double SparsePoly::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: point has wrong dimension");
  double acc = 0;
  for (const auto& [mono, coef] : terms_) {
    double t = coef.to_double();
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < mono.exps[v]; ++e) t *= x[v];
    acc += t;
  }
  return acc;
}

Q5Scalar SparsePoly::eval_exact(const Q5Vector& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: point has wrong dimension");
  Q5Scalar acc;
  for (const auto& [mono, coef] : terms_) {
    Q5Scalar t = coef;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < mono.exps[v]; ++e) t *= x[v];
    acc += t;
  }
  return acc;
}

std::string SparsePoly::str(std::vector<std::string> names) const {
  if (terms_.empty()) return "0";
  if (names.empty()) names = default_var_names(nvars_);
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : terms_) {
    bool lead_negative =
        coef.rat != 0 ? coef.rat < 0 : coef.irr < 0;
    Q5Scalar mag = lead_negative ? -coef : coef;
    if (first) {
      if (lead_negative) out += "-";
      first = false;
    } else {
      out += lead_negative ? " - " : " + ";
    }
    bool mixed = mag.rat != 0 && mag.irr != 0;
    std::string cs = mag.str();
    if (mono.is_one()) {
      out += cs;
    } else if (mag == Q5Scalar(1)) {
      out += mono.str(names);
    } else {
      out += (mixed ? "(" + cs + ")" : cs) + "*" + mono.str(names);
    }
  }
  return out;
}

Q5Vector SparsePoly::coeff_vector(const std::vector<Monomial>& basis) const {
  Q5Vector v(basis.size());
  std::size_t hit = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++hit;
    }
  }
  if (hit != terms_.size())
    throw std::invalid_argument("SparsePoly: coefficient outside monomial basis");
  return v;
}

}  // namespace icoflux
