#pragma once

#include <array>
#include <string>
#include <vector>

#include "icoflux/perm.hpp"
#include "icoflux/q5_matrix.hpp"

namespace icoflux {

// The six named rotations used as subgroup generators, as face permutations.
struct Generators {
  Permutation12 g2, g2d, g3, g3d, g5, g5d;
};
const Generators& generators();

// Breadth-first closure under composition. Throws if the closure exceeds
// max_order (internal consistency bound). Result is sorted lexicographically
// on image vectors, which fixes the iteration order everywhere downstream.
std::vector<Permutation12> close_under_composition(
    const std::vector<Permutation12>& gens, int max_order);

// Rotation group of the icosahedron acting on the 12 faces, with its five
// conjugacy classes keyed to representatives (e, g5, g5^2, g2, g2*g5).
class IcosahedralGroup {
 public:
  static const IcosahedralGroup& instance();

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation12>& elements() const { return elements_; }
  const Permutation12& element(int i) const { return elements_[i]; }
  int index_of(const Permutation12& p) const;  // throws if absent

  int num_classes() const { return 5; }
  int class_of(int element_index) const { return class_of_[element_index]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  std::array<int, 5> class_sizes() const;
  const Permutation12& class_representative(int cls) const {
    return elements_[representatives_[cls]];
  }

 private:
  IcosahedralGroup();

  std::vector<Permutation12> elements_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;    // element indices per class
  std::array<int, 5> representatives_{};
};

// 12x12 0/1 matrix with M e_j = e_{p(j)}; this choice makes the map a
// homomorphism for (p*q)(i) = p(q(i)) and reproduces the canonical block
// matrices after the change of basis.
Q5Matrix perm_to_matrix(const Permutation12& p);

enum class SubgroupName { T, D10, D6, Z5, D4, Z3, Z2 };

const std::vector<SubgroupName>& all_subgroup_names();
std::string subgroup_label(SubgroupName name);  // "T", "D10", ..., "Z2"
int subgroup_order(SubgroupName name);

struct SubgroupSpec {
  SubgroupName name;
  std::vector<Permutation12> generator_perms;
  std::vector<Permutation12> elements;  // closed, sorted
  int order() const { return static_cast<int>(elements.size()); }
};

// Generates and closes the named subgroup, then verifies its order and the
// generator relations; throws std::logic_error on any mismatch.
SubgroupSpec make_subgroup(SubgroupName name);

}  // namespace icoflux
