#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/group.hpp"

#include <numeric>

using namespace cayley;

namespace {

// Independent oracle: the order of a is the smallest m >= 1 with m*a = 0,
// found by repeated addition.
std::int64_t naive_order(const GroupSpec& g, const Element& a) {
  Element cur = a;
  std::int64_t m = 1;
  while (g.index_of(cur) != 0) {
    cur = g.add(cur, a);
    ++m;
  }
  return m;
}

}  // namespace

TEST_CASE("parsing and construction") {
  CHECK(GroupSpec::parse("6").moduli() == std::vector<std::int64_t>{6});
  CHECK(GroupSpec::parse("2x4x3").moduli() == std::vector<std::int64_t>{2, 4, 3});
  CHECK(GroupSpec::parse("2x4x3").order() == 24);
  CHECK(GroupSpec::parse("1").order() == 1);

  CHECK_THROWS_AS(GroupSpec::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("6x0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("2x-3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("2x"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(std::vector<std::int64_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec({100, 100}), ResourceError);

  CHECK(GroupSpec::parse("2x4x3").to_string() == "2x4x3");
}

TEST_CASE("canonical enumeration") {
  SUBCASE("Z_1 has only the identity") {
    const GroupSpec g({1});
    const auto elems = g.enumerate_elements();
    REQUIRE(elems.size() == 1);
    CHECK(elems[0] == Element{0});
  }
  SUBCASE("Z_2 x Z_2 is lexicographic, rightmost fastest") {
    const GroupSpec g({2, 2});
    const auto elems = g.enumerate_elements();
    REQUIRE(elems.size() == 4);
    CHECK(elems[0] == Element{0, 0});
    CHECK(elems[1] == Element{0, 1});
    CHECK(elems[2] == Element{1, 0});
    CHECK(elems[3] == Element{1, 1});
  }
  SUBCASE("single factor runs 0..n-1") {
    const GroupSpec g({6});
    for (std::int64_t i = 0; i < 6; ++i) {
      CHECK(g.element_at(i) == Element{i});
    }
  }
  SUBCASE("enumeration is stable") {
    const GroupSpec g({2, 3, 2});
    CHECK(g.enumerate_elements() == g.enumerate_elements());
  }
  SUBCASE("index_of inverts element_at") {
    const GroupSpec g({2, 4, 3});
    for (std::int64_t i = 0; i < g.order(); ++i) {
      CHECK(g.index_of(g.element_at(i)) == i);
    }
    // the documented flat index of (1,2) in Z_2 x Z_3
    CHECK(GroupSpec({2, 3}).index_of({1, 2}) == 5);
  }
}

TEST_CASE("element arithmetic") {
  const GroupSpec z6({6});
  CHECK(z6.add({4}, {5}) == Element{3});
  CHECK(z6.neg({0}) == Element{0});
  CHECK(z6.neg({2}) == Element{4});

  const GroupSpec g({2, 3});
  CHECK(g.add({1, 2}, {1, 2}) == Element{0, 1});

  CHECK_THROWS_AS(z6.add({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("order_of") {
  const GroupSpec z6({6});
  CHECK(z6.order_of({0}) == 1);

  // Frozen from the iterate-until-zero oracle.
  CHECK(naive_order(z6, {2}) == 3);
  CHECK(z6.order_of({2}) == 3);

  const GroupSpec g({2, 3});
  CHECK(naive_order(g, {1, 1}) == 6);
  CHECK(g.order_of({1, 1}) == 6);

  SUBCASE("Lagrange: order divides the group order, exhaustively") {
    for (const auto& moduli :
         {std::vector<std::int64_t>{24}, {2, 12}, {4, 6}, {2, 2, 6}, {2, 2, 2, 3}}) {
      const GroupSpec g2(moduli);
      for (std::int64_t i = 0; i < g2.order(); ++i) {
        const Element a = g2.element_at(i);
        CHECK(g2.order() % g2.order_of(a) == 0);
        CHECK(g2.order_of(a) == naive_order(g2, a));
      }
    }
  }
}

TEST_CASE("add is commutative and associative, neg is an involution") {
  const GroupSpec g({4, 3, 2});
  for (std::int64_t i = 0; i < g.order(); i += 3) {
    for (std::int64_t j = 1; j < g.order(); j += 5) {
      const Element a = g.element_at(i), b = g.element_at(j);
      CHECK(g.add(a, b) == g.add(b, a));
      for (std::int64_t k = 2; k < g.order(); k += 7) {
        const Element c = g.element_at(k);
        CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
      }
    }
  }
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const Element a = g.element_at(i);
    CHECK(g.neg(g.neg(a)) == a);
  }
}

TEST_CASE("cyclic_subgroup") {
  const GroupSpec z6({6});
  CHECK(cyclic_subgroup(z6, {0}) == GroupSubset::of_indices(z6, {0}));
  // Frozen from direct iteration: {0,2,4}.
  CHECK(cyclic_subgroup(z6, {2}) == GroupSubset::of_indices(z6, {0, 2, 4}));

  const GroupSpec klein({2, 2});
  const GroupSubset h = cyclic_subgroup(klein, {1, 1});
  CHECK(h == GroupSubset::of_elements(klein, {{0, 0}, {1, 1}}));

  SUBCASE("cardinality equals order_of") {
    const GroupSpec g({4, 3});
    for (std::int64_t i = 0; i < g.order(); ++i) {
      const Element a = g.element_at(i);
      CHECK(cyclic_subgroup(g, a).size() == g.order_of(a));
    }
  }
}

TEST_CASE("subgroup_generated") {
  const GroupSpec z6({6});
  CHECK(subgroup_generated(GroupSubset::empty(z6)) ==
        GroupSubset::of_indices(z6, {0}));
  CHECK(subgroup_generated(GroupSubset::of_indices(z6, {3})) ==
        GroupSubset::of_indices(z6, {0, 3}));
  CHECK(subgroup_generated(GroupSubset::of_indices(z6, {2, 3})) ==
        GroupSubset::full(z6));

  SUBCASE("generating from a single element matches cyclic_subgroup") {
    const GroupSpec g({2, 4});
    for (std::int64_t i = 0; i < g.order(); ++i) {
      CHECK(subgroup_generated(GroupSubset::of_indices(g, {i})) ==
            cyclic_subgroup(g, g.element_at(i)));
    }
  }
}

TEST_CASE("subset basics") {
  const GroupSpec z6({6});
  const GroupSubset s = GroupSubset::of_indices(z6, {1, 5});
  CHECK(s.size() == 2);
  CHECK(s.is_symmetric());
  CHECK(!GroupSubset::of_indices(z6, {1}).is_symmetric());
  CHECK(s.complement() == GroupSubset::of_indices(z6, {0, 2, 3, 4}));
  CHECK((s | GroupSubset::of_indices(z6, {0})).size() == 3);
  CHECK((s & GroupSubset::of_indices(z6, {1, 2})) ==
        GroupSubset::of_indices(z6, {1}));
  CHECK(s.minus(GroupSubset::of_indices(z6, {5})) ==
        GroupSubset::of_indices(z6, {1}));
  CHECK(s.to_string() == "{1,5}");
  CHECK(GroupSubset::of_elements(GroupSpec({2, 2}), {{1, 0}, {0, 1}}).to_string() ==
        "{(0,1),(1,0)}");

  CHECK_THROWS_AS(GroupSubset::of_indices(z6, {6}), std::invalid_argument);
  const GroupSpec z4({4});
  CHECK_THROWS_AS(
      GroupSubset::of_indices(z6, {1}).united(GroupSubset::of_indices(z4, {1})),
      std::invalid_argument);
}
