#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "icoflux/group.hpp"

using namespace icoflux;

TEST_CASE("generator fixtures") {
  const auto& g = generators();
  CHECK(g.g2.cycle_string() == "(1,6)(2,5)(3,9)(4,10)(7,12)(8,11)");
  CHECK(g.g5.cycle_string() == "(1,2,3,4,5)(7,8,9,10,11)");
  CHECK(g.g2d.cycle_string() == "(1,12)(2,8)(3,4)(5,11)(6,7)(9,10)");
  CHECK(g.g3.cycle_string() == "(1,2,6)(3,5,10)(4,9,11)(7,8,12)");
  CHECK(g.g3d.cycle_string() == "(1,10,2)(3,5,12)(4,8,7)(6,9,11)");
  CHECK(g.g5d.cycle_string() == "(1,10,11,3,6)(4,5,9,12,7)");
}

TEST_CASE("generator relations") {
  const auto& g = generators();
  CHECK((g.g2 * g.g2).is_identity());
  CHECK(g.g5.pow(5).is_identity());
  CHECK((g.g2 * g.g5).pow(3).is_identity());
}

TEST_CASE("composition convention (pq)(i) = p(q(i))") {
  const auto& g = generators();
  // g5 sends face 1 to 2, g2 sends face 2 to 5 => (g2 g5)(1) = 5
  Permutation12 prod = g.g2 * g.g5;
  CHECK(prod(0) == 4);  // 0-based
}

TEST_CASE("closure sizes") {
  const auto& g = generators();
  CHECK(close_under_composition({g.g2, g.g5}, 60).size() == 60);
  CHECK(close_under_composition({Permutation12()}, 60).size() == 1);
  CHECK(close_under_composition({g.g2}, 60).size() == 2);
  CHECK_THROWS_AS(close_under_composition({g.g2, g.g5}, 59), std::logic_error);
}

TEST_CASE("conjugacy classes against a from-scratch oracle") {
  const auto& group = IcosahedralGroup::instance();
  CHECK(group.size() == 60);
  CHECK(group.num_classes() == 5);
  CHECK(group.class_sizes() == std::array<int, 5>{1, 12, 12, 15, 20});
  CHECK(group.classes()[0].size() == 1);

  // independent partition: conjugate every element by every element using raw
  // image arrays only
  std::vector<std::array<int, 12>> elems;
  for (const auto& p : group.elements()) {
    std::array<int, 12> img{};
    for (int i = 0; i < 12; ++i) img[i] = p(i);
    elems.push_back(img);
  }
  auto compose = [](const std::array<int, 12>& p, const std::array<int, 12>& q) {
    std::array<int, 12> r{};
    for (int i = 0; i < 12; ++i) r[i] = p[q[i]];
    return r;
  };
  auto invert = [](const std::array<int, 12>& p) {
    std::array<int, 12> r{};
    for (int i = 0; i < 12; ++i) r[p[i]] = i;
    return r;
  };
  std::set<std::array<int, 12>> classified;
  std::multiset<std::size_t> class_sizes;
  for (const auto& x : elems) {
    if (classified.count(x)) continue;
    std::set<std::array<int, 12>> cls;
    for (const auto& g : elems) cls.insert(compose(compose(g, x), invert(g)));
    class_sizes.insert(cls.size());
    classified.insert(cls.begin(), cls.end());
  }
  CHECK(class_sizes == std::multiset<std::size_t>{1, 12, 12, 15, 20});

  // class order pins the representatives (e, g5, g5^2, g2, g2*g5)
  const auto& gen = generators();
  CHECK(group.class_of(group.index_of(Permutation12())) == 0);
  CHECK(group.class_of(group.index_of(gen.g5)) == 1);
  CHECK(group.class_of(group.index_of(gen.g5 * gen.g5)) == 2);
  CHECK(group.class_of(group.index_of(gen.g2)) == 3);
  CHECK(group.class_of(group.index_of(gen.g2 * gen.g5)) == 4);
}

TEST_CASE("sigma is a homomorphism on all 3600 pairs") {
  const auto& group = IcosahedralGroup::instance();
  for (int i = 0; i < group.size(); ++i)
    for (int j = 0; j < group.size(); ++j) {
      Permutation12 prod = group.element(i) * group.element(j);
      // composition stays inside the group (index_of throws otherwise)
      CHECK_NOTHROW((void)group.index_of(prod));
    }
}

TEST_CASE("perm_to_matrix") {
  const auto& gen = generators();
  CHECK(perm_to_matrix(Permutation12()) == Q5Matrix::identity(12));
  Q5Matrix m2 = perm_to_matrix(gen.g2);
  CHECK(m2 * m2 == Q5Matrix::identity(12));
  CHECK(perm_to_matrix(gen.g5).trace() == Q5Scalar(2));
  CHECK(perm_to_matrix(gen.g2).trace() == Q5Scalar(0));
}

TEST_CASE("rho is a homomorphism on all 3600 pairs") {
  const auto& group = IcosahedralGroup::instance();
  std::vector<Q5Matrix> mats;
  for (const auto& p : group.elements()) mats.push_back(perm_to_matrix(p));
  for (int i = 0; i < group.size(); ++i)
    for (int j = 0; j < group.size(); ++j) {
      int k = group.index_of(group.element(i) * group.element(j));
      CHECK(mats[i] * mats[j] == mats[k]);
    }
}

TEST_CASE("subgroups of the subgroup table") {
  const auto& group = IcosahedralGroup::instance();
  for (auto name : all_subgroup_names()) {
    SubgroupSpec spec = make_subgroup(name);
    CHECK(spec.order() == subgroup_order(name));
    for (const auto& e : spec.elements) CHECK_NOTHROW((void)group.index_of(e));
  }
  CHECK(make_subgroup(SubgroupName::D10).order() == 10);
  CHECK(make_subgroup(SubgroupName::T).order() == 12);
  CHECK(make_subgroup(SubgroupName::Z2).order() == 2);
  // D4 here is the Klein four-group: every non-identity element is an involution
  for (const auto& e : make_subgroup(SubgroupName::D4).elements)
    CHECK((e.is_identity() || e.order() == 2));
}

TEST_CASE("face action is transitive") {
  const auto& group = IcosahedralGroup::instance();
  std::set<int> images;
  for (const auto& p : group.elements()) images.insert(p(0));
  CHECK(images.size() == 12);
}

TEST_CASE("canonical element order is lexicographic") {
  const auto& group = IcosahedralGroup::instance();
  CHECK(std::is_sorted(group.elements().begin(), group.elements().end()));
}
