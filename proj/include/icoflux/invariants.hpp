#pragma once

#include <vector>

#include "icoflux/irreps.hpp"
#include "icoflux/sparse_poly.hpp"

namespace icoflux {

// Group average (1/|family|) sum_M f(M x) over a closed matrix family (the
// image of a finite group is closed under inverse, so this equals the dual
// action average). Exact; the identity on already-invariant polynomials.
SparsePoly reynolds(const SparsePoly& f, const std::vector<Q5Matrix>& family);

struct InvariantBasis {
  int irrep = 0;
  int degree = 0;
  std::vector<SparsePoly> polys;
  int dimension() const { return static_cast<int>(polys.size()); }
};

// Reynolds images of all degree-k monomials of block irrep's variables,
// reduced to a basis in monomial order.
InvariantBasis invariant_basis(int irrep, int degree);

// Substitutes the block rows of the canonical P^-1: the result is a polynomial
// in x1..x12, invariant under the full face representation.
SparsePoly lift_to_R12(const SparsePoly& p, int irrep);

// Checks every canonical block invariant: invariance under both generator
// matrices, membership in the span of the computed basis, and the squared
// identities p41 = (p21)^2 for the two 3-dimensional blocks.
std::vector<CheckResult> verify_block_invariants();

}  // namespace icoflux
