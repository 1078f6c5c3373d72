#pragma once

#include <array>

#include "icoflux/q5.hpp"
#include "icoflux/q5_matrix.hpp"

namespace icoflux {

inline constexpr std::array<int, 5> kIrrepDims = {1, 3, 3, 4, 5};

// Character table of the icosahedral rotation group. Classes are ordered
// (e, g5, g5^2, g2, g2*g5) with sizes (1, 12, 12, 15, 20); rows are the five
// irreducibles rho1..rho5. All values live in Q(sqrt 5).
class CharacterTable {
 public:
  static const CharacterTable& instance();

  const Q5Scalar& value(int irrep, int cls) const { return values_[irrep][cls]; }
  const std::array<Q5Scalar, 5>& row(int irrep) const { return values_[irrep]; }
  const std::array<int, 5>& class_sizes() const { return sizes_; }

  // <chi_i, chi_j> with the class-weighted inner product; characters are real
  // here so no conjugation is involved.
  Q5Scalar inner(const std::array<Q5Scalar, 5>& a, const std::array<Q5Scalar, 5>& b) const;

  bool rows_orthonormal() const;  // exact check of <chi_i, chi_j> = delta_ij

 private:
  CharacterTable();
  std::array<std::array<Q5Scalar, 5>, 5> values_;
  std::array<int, 5> sizes_;
};

// Traces of the given class-representative matrices, exact.
std::array<Q5Scalar, 5> character_of(const std::array<Q5Matrix, 5>& class_reps);

// Multiplicities <chi, chi_i> for i = 1..5; throws std::invalid_argument if
// any of them fails to be a non-negative rational integer (i.e. the input is
// not a character of a genuine representation).
std::array<int, 5> decompose_character(const std::array<Q5Scalar, 5>& chi);

}  // namespace icoflux
