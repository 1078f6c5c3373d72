#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace icoflux {

inline constexpr int kFaces = 12;

// Bijection on the 12 dodecahedral face labels. Faces are 1-based in I/O and
// 0-based in storage; the internal indexing never leaks through the API.
// Composition convention: (p*q)(i) = p(q(i)).
class Permutation12 {
 public:
  Permutation12() {
    for (int i = 0; i < kFaces; ++i) img_[i] = static_cast<uint8_t>(i);
  }

  // cycles use 1-based face labels, e.g. {{1,6},{2,5}}
  static Permutation12 from_cycles(const std::vector<std::vector<int>>& cycles);

  int operator()(int i) const { return img_[i]; }  // 0-based image

  Permutation12 operator*(const Permutation12& q) const {
    Permutation12 r;
    for (int i = 0; i < kFaces; ++i) r.img_[i] = img_[q.img_[i]];
    return r;
  }

  Permutation12 inverse() const {
    Permutation12 r;
    for (int i = 0; i < kFaces; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  Permutation12 pow(int k) const;

  bool is_identity() const {
    for (int i = 0; i < kFaces; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  int order() const;

  // canonical disjoint cycles, 1-based, fixed points omitted
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1,6)(2,5)..." or "e"

  auto operator<=>(const Permutation12&) const = default;

 private:
  std::array<uint8_t, kFaces> img_{};
};

}  // namespace icoflux
