#include "icoflux/irreps.hpp"

#include <stdexcept>

namespace icoflux {

Q5Matrix projection_operator(int irrep) {
  if (irrep < 1 || irrep > 5) throw std::invalid_argument("irrep must be 1..5");
  const auto& group = IcosahedralGroup::instance();
  const auto& table = CharacterTable::instance();
  Q5Matrix acc(kFaces, kFaces);
  for (int gi = 0; gi < group.size(); ++gi) {
    const Q5Scalar& chi = table.value(irrep - 1, group.class_of(gi));
    if (chi.is_zero()) continue;
    acc = acc + perm_to_matrix(group.element(gi)).scaled(chi);
  }
  return acc;
}

std::vector<Q5Vector> extract_basis(const Q5Matrix& projector) {
  SpanBuilder span(projector.rows());
  std::vector<Q5Vector> basis;
  for (int j = 0; j < projector.cols(); ++j) {
    Q5Vector col = projector.col(j);
    if (span.insert(col)) basis.push_back(std::move(col));
  }
  return basis;
}

namespace {

BlockDecomposition build_block_decomposition() {
  const auto& group = IcosahedralGroup::instance();
  const Q5Matrix& p = canonical_P();
  const Q5Matrix& pinv = canonical_P_inverse();

  BlockDecomposition dec;
  dec.multiplicities = {1, 1, 1, 0, 1};
  for (int slot = 0; slot < 4; ++slot)
    dec.blocks[slot].reserve(group.size());

  for (int gi = 0; gi < group.size(); ++gi) {
    Q5Matrix conj = pinv * perm_to_matrix(group.element(gi)) * p;
    // verify entries outside the diagonal blocks vanish exactly
    for (int i = 0; i < kFaces; ++i)
      for (int j = 0; j < kFaces; ++j) {
        int bi = -1, bj = -1;
        for (int s = 0; s < 4; ++s) {
          if (i >= kBlockOffsets[s] && i < kBlockOffsets[s] + kBlockDims[s]) bi = s;
          if (j >= kBlockOffsets[s] && j < kBlockOffsets[s] + kBlockDims[s]) bj = s;
        }
        if (bi != bj && !conj.at(i, j).is_zero())
          throw std::logic_error("conjugated representation is not block diagonal");
      }
    for (int s = 0; s < 4; ++s)
      dec.blocks[s].push_back(
          conj.block(kBlockOffsets[s], kBlockOffsets[s], kBlockDims[s], kBlockDims[s]));
  }
  return dec;
}

std::string q5_matrix_diff(const Q5Matrix& got, const Q5Matrix& want) {
  for (int i = 0; i < got.rows(); ++i)
    for (int j = 0; j < got.cols(); ++j)
      if (!(got.at(i, j) == want.at(i, j)))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): got " + got.at(i, j).str() + ", want " + want.at(i, j).str();
  return "";
}

}  // namespace

const BlockDecomposition& block_decomposition() {
  static const BlockDecomposition dec = build_block_decomposition();
  return dec;
}

std::vector<CheckResult> validate_block_structure() {
  std::vector<CheckResult> out;
  const auto& group = IcosahedralGroup::instance();
  const auto& table = CharacterTable::instance();
  const Q5Matrix& p = canonical_P();

  {
    CheckResult r{"P invertible (P * P^-1 = I)", false, ""};
    r.pass = p * canonical_P_inverse() == Q5Matrix::identity(kFaces);
    out.push_back(r);
  }

  // columns of P lie in the images of the projectors
  for (int s = 0; s < 4; ++s) {
    int irrep = kBlockIrreps[s];
    Q5Matrix proj = projection_operator(irrep);
    SpanBuilder image(kFaces);
    for (int j = 0; j < kFaces; ++j) image.insert(proj.col(j));
    CheckResult r{"columns " + std::to_string(kBlockOffsets[s] + 1) + "-" +
                      std::to_string(kBlockOffsets[s] + kBlockDims[s]) +
                      " lie in the image of projector " + std::to_string(irrep),
                  true, ""};
    if (image.rank() != kBlockDims[s]) {
      r.pass = false;
      r.detail = "projector rank " + std::to_string(image.rank());
    } else {
      for (int j = kBlockOffsets[s]; j < kBlockOffsets[s] + kBlockDims[s]; ++j)
        if (!image.contains(p.col(j))) {
          r.pass = false;
          r.detail = "column " + std::to_string(j + 1) + " is outside";
          break;
        }
    }
    out.push_back(r);
  }

  // generator blocks match the canonical matrices
  const auto& gens = generators();
  const BlockDecomposition& dec = block_decomposition();
  for (int s = 0; s < 4; ++s) {
    int irrep = kBlockIrreps[s];
    for (int which : {2, 5}) {
      const Permutation12& gperm = which == 2 ? gens.g2 : gens.g5;
      const Q5Matrix& got = dec.blocks[s][group.index_of(gperm)];
      const Q5Matrix& want = irrep_generator_matrix(irrep, which);
      CheckResult r{"block of rho" + std::to_string(irrep) + " at g" +
                        std::to_string(which) + " matches the canonical matrix",
                    got == want, ""};
      if (!r.pass) r.detail = q5_matrix_diff(got, want);
      out.push_back(r);
    }
  }

  // canonical generator matrices satisfy the defining relations
  for (int s = 0; s < 4; ++s) {
    int irrep = kBlockIrreps[s];
    const Q5Matrix& a = irrep_generator_matrix(irrep, 2);
    const Q5Matrix& b = irrep_generator_matrix(irrep, 5);
    Q5Matrix eye = Q5Matrix::identity(kBlockDims[s]);
    Q5Matrix ab = a * b;
    bool ok = (a * a == eye) && (b * b * b * b * b == eye) && (ab * ab * ab == eye);
    out.push_back({"canonical rho" + std::to_string(irrep) +
                       " generators satisfy g2^2 = g5^5 = (g2 g5)^3 = 1",
                   ok, ""});
  }

  // all 60 elements block-diagonalize (block_decomposition throws otherwise)
  {
    CheckResult r{"P^-1 rho(g) P is block diagonal with sizes (1,3,3,5) for all 60 g",
                  false, ""};
    try {
      (void)block_decomposition();
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(r);
  }

  // block traces reproduce the character table
  for (int s = 0; s < 4; ++s) {
    int irrep = kBlockIrreps[s];
    CheckResult r{"traces of rho" + std::to_string(irrep) +
                      " blocks reproduce the character table row",
                  true, ""};
    for (int gi = 0; gi < group.size(); ++gi) {
      const Q5Scalar& want = table.value(irrep - 1, group.class_of(gi));
      if (!(dec.blocks[s][gi].trace() == want)) {
        r.pass = false;
        r.detail = "element " + group.element(gi).cycle_string();
        break;
      }
    }
    out.push_back(r);
  }

  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace icoflux
