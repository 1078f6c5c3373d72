#include "icoflux/invariants.hpp"

#include <stdexcept>

namespace icoflux {

SparsePoly reynolds(const SparsePoly& f, const std::vector<Q5Matrix>& family) {
  if (family.empty()) throw std::invalid_argument("reynolds: empty matrix family");
  SparsePoly acc(f.nvars());
  for (const auto& m : family) acc = acc + f.compose_linear(m);
  return acc.scaled(Q5Scalar(Rational(1, static_cast<int>(family.size()))));
}

InvariantBasis invariant_basis(int irrep, int degree) {
  if (degree < 1) throw std::invalid_argument("invariant_basis: degree must be >= 1");
  int slot = block_slot(irrep);
  const auto& family = block_decomposition().blocks[slot];
  int dim = kBlockDims[slot];

  std::vector<Monomial> monos = monomials_of_degree(dim, degree);
  InvariantBasis basis{irrep, degree, {}};
  SpanBuilder span(static_cast<int>(monos.size()));
  for (const auto& m : monos) {
    SparsePoly image = reynolds(SparsePoly::term(m, 1), family);
    if (image.is_zero()) continue;
    if (span.insert(image.coeff_vector(monos))) basis.polys.push_back(std::move(image));
  }
  return basis;
}

SparsePoly lift_to_R12(const SparsePoly& p, int irrep) {
  int slot = block_slot(irrep);
  if (p.nvars() != kBlockDims[slot])
    throw std::invalid_argument("lift_to_R12: polynomial has wrong variable count");
  Q5Matrix rows = canonical_P_inverse().block(kBlockOffsets[slot], 0, kBlockDims[slot], kFaces);
  return p.compose_linear(rows);
}

std::vector<CheckResult> verify_block_invariants() {
  std::vector<CheckResult> out;

  for (const auto& ref : block_invariants()) {
    std::string tag = "p^(" + std::to_string(ref.irrep) + ")_" +
                      std::to_string(ref.degree) + std::to_string(ref.index);
    bool inv = true;
    std::string witness;
    for (int which : {2, 5}) {
      const Q5Matrix& gen = irrep_generator_matrix(ref.irrep, which);
      if (!(ref.poly.compose_linear(gen) == ref.poly)) {
        inv = false;
        witness = "g" + std::to_string(which);
        break;
      }
    }
    out.push_back({tag + " invariant under both canonical generators", inv, witness});

    InvariantBasis basis = invariant_basis(ref.irrep, ref.degree);
    std::vector<Monomial> monos = monomials_of_degree(ref.poly.nvars(), ref.degree);
    SpanBuilder span(static_cast<int>(monos.size()));
    for (const auto& b : basis.polys) span.insert(b.coeff_vector(monos));
    bool in_span = span.contains(ref.poly.coeff_vector(monos));
    out.push_back({tag + " lies in the span of the computed basis", in_span, ""});
  }

  for (int irrep : {2, 3}) {
    const SparsePoly& q = block_invariant(irrep, 2, 1);
    bool ok = block_invariant(irrep, 4, 1) == q * q;
    out.push_back({"p^(" + std::to_string(irrep) + ")_41 equals (p^(" +
                       std::to_string(irrep) + ")_21)^2",
                   ok, ""});
  }

  return out;
}

}  // namespace icoflux
