#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace icoflux {

// Exponent vector of a power product. Total order is graded lexicographic:
// higher total degree first, ties broken by the leftmost differing exponent.
struct Monomial {
  std::vector<uint16_t> exps;

  Monomial() = default;
  explicit Monomial(int nvars) : exps(nvars, 0) {}
  Monomial(std::initializer_list<uint16_t> e) : exps(e) {}

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }

  std::string str(const std::vector<std::string>& names) const;
};

inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

// Comparator that makes ordered maps iterate leading term first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_greater(a, b);
  }
};

// All monomials of the given total degree, leading (grlex-largest) first.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

std::vector<std::string> default_var_names(int nvars);

}  // namespace icoflux
