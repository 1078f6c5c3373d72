#include "icoflux/monomial.hpp"

namespace icoflux {

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate(int nvars, int degree, Monomial& cur, int var,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.exps[var] = static_cast<uint16_t>(degree);
    out.push_back(cur);
    cur.exps[var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.exps[var] = static_cast<uint16_t>(e);
    enumerate(nvars, degree - e, cur, var + 1, out);
  }
  cur.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  if (nvars == 0) return out;
  enumerate(nvars, degree, cur, 0, out);
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace icoflux
