#include "icoflux/perm.hpp"

#include <stdexcept>

namespace icoflux {

Permutation12 Permutation12::from_cycles(const std::vector<std::vector<int>>& cycles) {
  Permutation12 p;
  std::array<bool, kFaces> seen{};
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > kFaces || to < 1 || to > kFaces)
        throw std::invalid_argument("Permutation12: face label out of range");
      if (seen[from - 1])
        throw std::invalid_argument("Permutation12: cycles are not disjoint");
      seen[from - 1] = true;
      p.img_[from - 1] = static_cast<uint8_t>(to - 1);
    }
  }
  return p;
}

Permutation12 Permutation12::pow(int k) const {
  Permutation12 r;
  Permutation12 base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int Permutation12::order() const {
  Permutation12 p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
    if (n > 60) throw std::logic_error("Permutation12: order exceeds group bound");
  }
  return n;
}

std::vector<std::vector<int>> Permutation12::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kFaces> seen{};
  for (int start = 0; start < kFaces; ++start) {
    if (seen[start] || img_[start] == start) continue;
    std::vector<int> cyc;
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      cyc.push_back(i + 1);
      i = img_[i];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation12::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cyc : cs) {
    out += "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(cyc[k]);
    }
    out += ")";
  }
  return out;
}

}  // namespace icoflux
