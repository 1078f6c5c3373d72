#pragma once

#include <array>
#include <vector>

#include "icoflux/q5_matrix.hpp"
#include "icoflux/sparse_poly.hpp"

namespace icoflux {

// Canonical change-of-basis matrix whose columns span the isotypic components
// V1 (col 0), V2 (cols 1-3), V3 (cols 4-6) and V5 (cols 7-11). Every
// closed-form expression downstream (origin spectrum a/6, b/10, ...; branch
// coordinates) is written in these exact coordinates, so this matrix is a
// fixture: regenerating a basis from the projectors would rescale the
// parameters silently.
const Q5Matrix& canonical_P();
const Q5Matrix& canonical_P_inverse();

// Irrep labels are 1, 2, 3, 5; rho4 has multiplicity zero in the face
// representation and owns no block.
inline constexpr std::array<int, 4> kBlockIrreps = {1, 2, 3, 5};
inline constexpr std::array<int, 4> kBlockOffsets = {0, 1, 4, 7};
inline constexpr std::array<int, 4> kBlockDims = {1, 3, 3, 5};

int block_slot(int irrep);  // 1->0, 2->1, 3->2, 5->3; throws otherwise

// Generator images in the canonical basis; which is 2 for g2 and 5 for g5.
const Q5Matrix& irrep_generator_matrix(int irrep, int which);

// Canonical invariant polynomials of each irrep block, in dim(V_i) variables
// (written x,y,z resp. x,y,z,t,u when printed).
struct BlockInvariant {
  int irrep;
  int degree;
  int index;  // 1-based within (irrep, degree)
  SparsePoly poly;
};

// The nine entries for irreps 2, 3, 5 up to degree 4 (including the two cubic
// invariants of the 5-dimensional block, which the quartic energy drops).
const std::vector<BlockInvariant>& block_invariants();
const SparsePoly& block_invariant(int irrep, int degree, int index);

// Invariants of the trivial block: x^k.
SparsePoly power_invariant(int degree);

}  // namespace icoflux
