#include "icoflux/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace icoflux {

const Generators& generators() {
  static const Generators g = [] {
    Generators gen;
    gen.g2 = Permutation12::from_cycles({{1, 6}, {2, 5}, {3, 9}, {4, 10}, {7, 12}, {8, 11}});
    gen.g2d = Permutation12::from_cycles({{1, 12}, {2, 8}, {3, 4}, {5, 11}, {6, 7}, {9, 10}});
    gen.g3 = Permutation12::from_cycles({{1, 2, 6}, {3, 5, 10}, {4, 9, 11}, {7, 8, 12}});
    gen.g3d = Permutation12::from_cycles({{1, 10, 2}, {3, 5, 12}, {4, 8, 7}, {6, 9, 11}});
    gen.g5 = Permutation12::from_cycles({{1, 2, 3, 4, 5}, {7, 8, 9, 10, 11}});
    gen.g5d = Permutation12::from_cycles({{1, 10, 11, 3, 6}, {4, 5, 9, 12, 7}});
    return gen;
  }();
  return g;
}

std::vector<Permutation12> close_under_composition(
    const std::vector<Permutation12>& gens, int max_order) {
  std::set<Permutation12> seen;
  seen.insert(Permutation12());
  std::vector<Permutation12> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation12> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation12 ge = g * e;
        if (seen.insert(ge).second) {
          next.push_back(ge);
          if (static_cast<int>(seen.size()) > max_order)
            throw std::logic_error("closure exceeds expected group order");
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

IcosahedralGroup::IcosahedralGroup() {
  const auto& gen = generators();
  elements_ = close_under_composition({gen.g2, gen.g5}, 60);
  if (elements_.size() != 60)
    throw std::logic_error("icosahedral group closure is not 60 elements");

  // classes by exhaustive conjugation
  class_of_.assign(60, -1);
  std::vector<std::vector<int>> raw_classes;
  for (int i = 0; i < 60; ++i) {
    if (class_of_[i] >= 0) continue;
    int cls = static_cast<int>(raw_classes.size());
    std::vector<int> members;
    for (const auto& g : elements_) {
      Permutation12 c = g * elements_[i] * g.inverse();
      int idx = index_of(c);
      if (class_of_[idx] < 0) {
        class_of_[idx] = cls;
        members.push_back(idx);
      }
    }
    std::sort(members.begin(), members.end());
    raw_classes.push_back(std::move(members));
  }
  if (raw_classes.size() != 5)
    throw std::logic_error("icosahedral group does not have 5 conjugacy classes");

  // reorder classes to (e, g5, g5^2, g2, g2*g5)
  std::array<Permutation12, 5> reps = {Permutation12(), gen.g5, gen.g5 * gen.g5,
                                       gen.g2, gen.g2 * gen.g5};
  std::vector<int> new_of(60, -1);
  classes_.assign(5, {});
  for (int c = 0; c < 5; ++c) {
    int rep_idx = index_of(reps[c]);
    representatives_[c] = rep_idx;
    int old = class_of_[rep_idx];
    classes_[c] = raw_classes[old];
    for (int m : classes_[c]) new_of[m] = c;
  }
  for (int i = 0; i < 60; ++i)
    if (new_of[i] < 0) throw std::logic_error("class representatives do not cover the group");
  class_of_ = std::move(new_of);
}

const IcosahedralGroup& IcosahedralGroup::instance() {
  static const IcosahedralGroup g;
  return g;
}

int IcosahedralGroup::index_of(const Permutation12& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw std::invalid_argument("permutation is not a group element");
  return static_cast<int>(it - elements_.begin());
}

std::array<int, 5> IcosahedralGroup::class_sizes() const {
  std::array<int, 5> s{};
  for (int c = 0; c < 5; ++c) s[c] = static_cast<int>(classes_[c].size());
  return s;
}

Q5Matrix perm_to_matrix(const Permutation12& p) {
  Q5Matrix m(kFaces, kFaces);
  for (int j = 0; j < kFaces; ++j) m.at(p(j), j) = 1;
  return m;
}

const std::vector<SubgroupName>& all_subgroup_names() {
  static const std::vector<SubgroupName> names = {
      SubgroupName::T,  SubgroupName::D10, SubgroupName::D6, SubgroupName::Z5,
      SubgroupName::D4, SubgroupName::Z3,  SubgroupName::Z2};
  return names;
}

std::string subgroup_label(SubgroupName name) {
  switch (name) {
    case SubgroupName::T: return "T";
    case SubgroupName::D10: return "D10";
    case SubgroupName::D6: return "D6";
    case SubgroupName::Z5: return "Z5";
    case SubgroupName::D4: return "D4";
    case SubgroupName::Z3: return "Z3";
    case SubgroupName::Z2: return "Z2";
  }
  throw std::invalid_argument("unknown subgroup");
}

int subgroup_order(SubgroupName name) {
  switch (name) {
    case SubgroupName::T: return 12;
    case SubgroupName::D10: return 10;
    case SubgroupName::D6: return 6;
    case SubgroupName::Z5: return 5;
    case SubgroupName::D4: return 4;
    case SubgroupName::Z3: return 3;
    case SubgroupName::Z2: return 2;
  }
  throw std::invalid_argument("unknown subgroup");
}

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("subgroup relation failed: ") + what);
}

}  // namespace

SubgroupSpec make_subgroup(SubgroupName name) {
  const auto& g = generators();
  SubgroupSpec spec;
  spec.name = name;
  switch (name) {
    case SubgroupName::T:
      spec.generator_perms = {g.g2, g.g3d};
      require((g.g2 * g.g2).is_identity(), "g2^2 = e");
      require(g.g3d.pow(3).is_identity(), "g3d^3 = e");
      require((g.g2 * g.g3d).pow(3).is_identity(), "(g2 g3d)^3 = e");
      break;
    case SubgroupName::D10:
      spec.generator_perms = {g.g2d, g.g5d};
      require((g.g2d * g.g2d).is_identity(), "g2d^2 = e");
      require(g.g5d.pow(5).is_identity(), "g5d^5 = e");
      require((g.g5d * g.g2d).pow(2).is_identity(), "(g5d g2d)^2 = e");
      break;
    case SubgroupName::D6:
      spec.generator_perms = {g.g2d, g.g3};
      require((g.g2d * g.g2d).is_identity(), "g2d^2 = e");
      require(g.g3.pow(3).is_identity(), "g3^3 = e");
      require((g.g3 * g.g2d).pow(2).is_identity(), "(g3 g2d)^2 = e");
      break;
    case SubgroupName::Z5:
      spec.generator_perms = {g.g5};
      require(g.g5.pow(5).is_identity(), "g5^5 = e");
      break;
    case SubgroupName::D4:
      spec.generator_perms = {g.g2d, g.g2};
      require((g.g2d * g.g2d).is_identity(), "g2d^2 = e");
      require((g.g2 * g.g2).is_identity(), "g2^2 = e");
      require((g.g2 * g.g2d).pow(2).is_identity(), "(g2 g2d)^2 = e");
      break;
    case SubgroupName::Z3:
      spec.generator_perms = {g.g3};
      require(g.g3.pow(3).is_identity(), "g3^3 = e");
      break;
    case SubgroupName::Z2:
      spec.generator_perms = {g.g2};
      require((g.g2 * g.g2).is_identity(), "g2^2 = e");
      break;
  }
  spec.elements = close_under_composition(spec.generator_perms, subgroup_order(name));
  if (spec.order() != subgroup_order(name))
    throw std::logic_error("subgroup order mismatch for " + subgroup_label(name));
  return spec;
}

}  // namespace icoflux
