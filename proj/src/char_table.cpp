#include "icoflux/char_table.hpp"

#include <stdexcept>

namespace icoflux {

CharacterTable::CharacterTable() : sizes_{1, 12, 12, 15, 20} {
  const Q5Scalar tau = Q5Scalar::tau();
  const Q5Scalar one_minus_tau = Q5Scalar(1) - tau;
  values_[0] = {1, 1, 1, 1, 1};
  values_[1] = {3, tau, one_minus_tau, -1, 0};
  values_[2] = {3, one_minus_tau, tau, -1, 0};
  values_[3] = {4, -1, -1, 0, 1};
  values_[4] = {5, 0, 0, 1, -1};
}

const CharacterTable& CharacterTable::instance() {
  static const CharacterTable t;
  return t;
}

Q5Scalar CharacterTable::inner(const std::array<Q5Scalar, 5>& a,
                               const std::array<Q5Scalar, 5>& b) const {
  Q5Scalar acc;
  for (int c = 0; c < 5; ++c) acc += Q5Scalar(sizes_[c]) * a[c] * b[c];
  return acc * Q5Scalar(Rational(1, 60));
}

bool CharacterTable::rows_orthonormal() const {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Q5Scalar want = i == j ? Q5Scalar(1) : Q5Scalar(0);
      if (!(inner(values_[i], values_[j]) == want)) return false;
    }
  return true;
}

std::array<Q5Scalar, 5> character_of(const std::array<Q5Matrix, 5>& class_reps) {
  std::array<Q5Scalar, 5> chi;
  for (int c = 0; c < 5; ++c) chi[c] = class_reps[c].trace();
  return chi;
}

std::array<int, 5> decompose_character(const std::array<Q5Scalar, 5>& chi) {
  const auto& table = CharacterTable::instance();
  std::array<int, 5> mult{};
  for (int i = 0; i < 5; ++i) {
    Q5Scalar m = table.inner(chi, table.row(i));
    if (!m.is_rational() || denominator(m.rat) != 1 || m.rat < 0)
      throw std::invalid_argument("class function is not a character: multiplicity " +
                                  m.str() + " for irrep " + std::to_string(i + 1));
    mult[i] = static_cast<int>(numerator(m.rat));
  }
  return mult;
}

}  // namespace icoflux
