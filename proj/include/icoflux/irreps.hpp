#pragma once

#include <array>
#include <string>
#include <vector>

#include "icoflux/canonical.hpp"
#include "icoflux/char_table.hpp"
#include "icoflux/group.hpp"

namespace icoflux {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Isotypic projector P_i = sum_g chi_i(g) rho(g), exact, without the dim/|G|
// prefactor: only its image is used downstream. irrep is 1-based (1..5).
Q5Matrix projection_operator(int irrep);

// First linearly independent columns P_i e_1, P_i e_2, ... in index order.
std::vector<Q5Vector> extract_basis(const Q5Matrix& projector);

// Exact block data for every group element in the canonical basis.
struct BlockDecomposition {
  std::array<int, 5> multiplicities;  // (1,1,1,0,1)
  // blocks[slot][g]: the dim(V_i) x dim(V_i) image of group element g
  std::array<std::vector<Q5Matrix>, 4> blocks;
};

// Computed once; throws std::logic_error if P^-1 rho(g) P has any entry
// outside the four diagonal blocks for some g.
const BlockDecomposition& block_decomposition();

// Full validation of the canonical fixtures:
//  - each column of P lies in the image of the matching projector,
//  - P^-1 rho(g) P equals the canonical generator blocks for g2 and g5,
//  - the canonical generator matrices satisfy g2^2 = g5^5 = (g2 g5)^3 = 1,
//  - conjugation block-diagonalizes all 60 elements with block sizes (1,3,3,5),
//  - block traces reproduce the character table rows.
std::vector<CheckResult> validate_block_structure();

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace icoflux
