#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/boolean_algebra.hpp"

#include <numeric>
#include <set>

using namespace cayley;

namespace {

// Oracle for atoms: enumerate k coprime to the order by trial gcd and collect
// the multiples directly.
GroupSubset atom_by_enumeration(const GroupSpec& g, const Element& a) {
  const std::int64_t ord = g.order_of(a);
  std::vector<Element> members;
  for (std::int64_t k = 1; k <= ord; ++k) {
    if (std::gcd(k, ord) == 1) members.push_back(g.scale(k, a));
  }
  return GroupSubset::of_elements(g, members);
}

// Oracle for sumsets: enumerate all pairs.
GroupSubset sumset_by_pairs(const GroupSubset& s, const GroupSubset& t) {
  const GroupSpec& g = s.group();
  if (s.is_empty() || t.is_empty()) return GroupSubset::empty(g);
  std::vector<Element> members;
  for (const Element& a : s.elements()) {
    for (const Element& b : t.elements()) {
      members.push_back(g.add(a, b));
    }
  }
  return GroupSubset::of_elements(g, members);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("atom_of") {
  const GroupSpec z6({6});
  CHECK(atom_of(z6, {0}) == GroupSubset::of_indices(z6, {0}));
  CHECK(atom_of(z6, {1}) == GroupSubset::of_indices(z6, {1, 5}));

  const GroupSpec z4({4});
  CHECK(atom_of(z4, {2}) == GroupSubset::of_indices(z4, {2}));

  SUBCASE("matches the enumeration oracle and phi cardinality") {
    for (const auto& moduli : {std::vector<std::int64_t>{12}, {2, 4}, {3, 3}}) {
      const GroupSpec g(moduli);
      for (std::int64_t i = 0; i < g.order(); ++i) {
        const Element a = g.element_at(i);
        const GroupSubset atom = atom_of(g, a);
        CHECK(atom == atom_by_enumeration(g, a));
        CHECK(atom.size() == euler_phi(g.order_of(a)));
      }
    }
  }
}

TEST_CASE("atom_partition") {
  SUBCASE("Z_5") {
    const AtomPartition p(GroupSpec({5}));
    REQUIRE(p.atoms().size() == 2);
    CHECK(p.atoms()[0] == GroupSubset::of_indices(p.group(), {0}));
    CHECK(p.atoms()[1] == GroupSubset::of_indices(p.group(), {1, 2, 3, 4}));
  }
  SUBCASE("Z_6") {
    const AtomPartition p(GroupSpec({6}));
    REQUIRE(p.atoms().size() == 4);
    CHECK(p.atoms()[0] == GroupSubset::of_indices(p.group(), {0}));
    CHECK(p.atoms()[1] == GroupSubset::of_indices(p.group(), {1, 5}));
    CHECK(p.atoms()[2] == GroupSubset::of_indices(p.group(), {2, 4}));
    CHECK(p.atoms()[3] == GroupSubset::of_indices(p.group(), {3}));
  }
  SUBCASE("Klein group splits into singletons") {
    const AtomPartition p(GroupSpec({2, 2}));
    REQUIRE(p.atoms().size() == 4);
    for (const GroupSubset& atom : p.atoms()) CHECK(atom.size() == 1);
  }
  SUBCASE("partition covers the group exactly once, orders up to 64") {
    for (const auto& moduli :
         {std::vector<std::int64_t>{64}, {2, 32}, {8, 8}, {2, 2, 2, 2}, {60}}) {
      const GroupSpec g(moduli);
      const AtomPartition p(g);
      std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
      std::int64_t total = 0;
      for (const GroupSubset& atom : p.atoms()) {
        total += atom.size();
        for (std::int64_t i : atom.indices()) ++hits[static_cast<std::size_t>(i)];
      }
      CHECK(total == g.order());
      for (int h : hits) CHECK(h == 1);
      for (std::int64_t i = 0; i < g.order(); ++i) {
        CHECK(p.atom_containing_index(i) == atom_of(g, g.element_at(i)));
      }
    }
  }
}

TEST_CASE("in_boolean_algebra") {
  const GroupSpec z5({5});
  CHECK(in_boolean_algebra(GroupSubset::empty(z5)));
  CHECK(!in_boolean_algebra(GroupSubset::of_indices(z5, {1, 4})));

  const GroupSpec z6({6});
  CHECK(in_boolean_algebra(GroupSubset::of_indices(z6, {1, 3, 5})));

  SUBCASE("Prop 1a: atoms never straddle a union of atoms") {
    const GroupSpec g({2, 6});
    const AtomPartition p(g);
    const std::size_t k = p.atoms().size();
    REQUIRE(k <= 12);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      GroupSubset s = GroupSubset::empty(g);
      for (std::size_t i = 0; i < k; ++i) {
        if (bits & (std::uint64_t{1} << i)) s = s.united(p.atoms()[i]);
      }
      CHECK(in_boolean_algebra(p, s));
      for (std::int64_t e = 0; e < g.order(); ++e) {
        const GroupSubset& atom = p.atom_containing_index(e);
        CHECK((atom.is_subset_of(s) || atom.intersected(s).is_empty()));
      }
    }
  }

  SUBCASE("Prop 1b: atom equals cyclic subgroup minus proper subgroups") {
    for (const auto& moduli : {std::vector<std::int64_t>{24}, {2, 12}, {4, 6}}) {
      const GroupSpec g(moduli);
      for (std::int64_t i = 0; i < g.order(); ++i) {
        const Element a = g.element_at(i);
        const std::int64_t ord = g.order_of(a);
        GroupSubset proper = GroupSubset::empty(g);
        for (std::int64_t q = 1; q < ord; ++q) {
          if (ord % q == 0) {
            proper = proper.united(cyclic_subgroup(g, g.scale(ord / q, a)));
          }
        }
        CHECK(atom_of(g, a) == cyclic_subgroup(g, a).minus(proper));
      }
    }
  }
}

TEST_CASE("sumset") {
  const GroupSpec z4({4});
  const GroupSubset s13 = GroupSubset::of_indices(z4, {1, 3});
  CHECK(sumset(s13, s13) == GroupSubset::of_indices(z4, {0, 2}));
  CHECK(sumset(s13, s13) == sumset_by_pairs(s13, s13));

  const GroupSpec z6({6});
  const GroupSubset s15 = GroupSubset::of_indices(z6, {1, 5});
  CHECK(sumset(s15, s15) == GroupSubset::of_indices(z6, {0, 2, 4}));

  SUBCASE("identity and empty behavior") {
    const GroupSubset zero = GroupSubset::of_indices(z6, {0});
    const GroupSubset any = GroupSubset::of_indices(z6, {2, 3});
    CHECK(sumset(zero, any) == any);
    CHECK(sumset(GroupSubset::empty(z6), any) == GroupSubset::empty(z6));
    CHECK(sumset(any, GroupSubset::empty(z6)) == GroupSubset::empty(z6));
  }
  SUBCASE("group mismatch is rejected") {
    CHECK_THROWS_AS(sumset(s13, s15), std::invalid_argument);
  }
  SUBCASE("agrees with the pair-enumeration oracle on random subsets") {
    const GroupSpec g({3, 4});
    std::uint64_t state = 12345;
    for (int t = 0; t < 20; ++t) {
      std::vector<std::uint8_t> m1(12), m2(12);
      for (int i = 0; i < 12; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        m1[i] = (state >> 17) & 1;
        m2[i] = (state >> 31) & 1;
      }
      const GroupSubset a = GroupSubset::from_mask(g, m1);
      const GroupSubset b = GroupSubset::from_mask(g, m2);
      CHECK(sumset(a, b) == sumset_by_pairs(a, b));
    }
  }
}

TEST_CASE("iterated_sumset") {
  const GroupSpec z6({6});
  const GroupSubset s = GroupSubset::of_indices(z6, {1, 5});
  CHECK(iterated_sumset(s, 0) == GroupSubset::of_indices(z6, {0}));
  CHECK(iterated_sumset(s, 2) == GroupSubset::of_indices(z6, {0, 2, 4}));
  CHECK(iterated_sumset(s, 3) == GroupSubset::of_indices(z6, {1, 3, 5}));
  CHECK_THROWS_AS(iterated_sumset(s, -1), std::invalid_argument);
}

TEST_CASE("Theorem 1: sums of atoms stay in the algebra") {
  for (const auto& moduli :
       {std::vector<std::int64_t>{16}, {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2},
        {15}, {2, 6}}) {
    const GroupSpec g(moduli);
    const AtomPartition p(g);
    for (const GroupSubset& a : p.atoms()) {
      for (const GroupSubset& b : p.atoms()) {
        CHECK(in_boolean_algebra(p, sumset(a, b)));
      }
    }
  }
}

TEST_CASE("gcd_type") {
  const GroupSpec z6({6});
  CHECK(gcd_type(z6, {0}).d == std::vector<std::int64_t>{6});
  CHECK(gcd_type(z6, {4}).d == std::vector<std::int64_t>{2});

  const GroupSpec g({4, 6});
  CHECK(gcd_type(g, {2, 3}).d == std::vector<std::int64_t>{2, 3});
  CHECK(gcd_type(g, {0, 0}).d == std::vector<std::int64_t>{4, 6});
}

TEST_CASE("elementary_gcd_set") {
  const GroupSpec z6({6});
  CHECK(elementary_gcd_set(z6, {{6}}) == GroupSubset::of_indices(z6, {0}));
  CHECK(elementary_gcd_set(z6, {{2}}) == GroupSubset::of_indices(z6, {2, 4}));

  const GroupSpec g({4, 2});
  CHECK(elementary_gcd_set(g, {{2, 1}}) == GroupSubset::of_elements(g, {{2, 1}}));

  CHECK_THROWS_AS(elementary_gcd_set(z6, {{4}}), std::invalid_argument);
  CHECK_THROWS_AS(elementary_gcd_set(z6, {{2, 1}}), std::invalid_argument);

  SUBCASE("divisor tuples partition the group") {
    for (const auto& moduli : {std::vector<std::int64_t>{12}, {4, 6}, {2, 3, 2}}) {
      const GroupSpec g2(moduli);
      std::vector<int> hits(static_cast<std::size_t>(g2.order()), 0);
      for (const DivisorTuple& t : divisor_tuples(g2)) {
        for (std::int64_t i : elementary_gcd_set(g2, t).indices()) {
          ++hits[static_cast<std::size_t>(i)];
        }
      }
      for (int h : hits) CHECK(h == 1);
    }
  }
  SUBCASE("tuple catalog is lexicographic, rightmost fastest") {
    const auto tuples = divisor_tuples(GroupSpec({4, 2}));
    REQUIRE(tuples.size() == 6);
    CHECK(tuples[0].d == std::vector<std::int64_t>{1, 1});
    CHECK(tuples[1].d == std::vector<std::int64_t>{1, 2});
    CHECK(tuples[2].d == std::vector<std::int64_t>{2, 1});
    CHECK(tuples[5].d == std::vector<std::int64_t>{4, 2});
  }
}

TEST_CASE("is_gcd_set") {
  const GroupSpec z6({6});
  CHECK(is_gcd_set(GroupSubset::empty(z6)));
  CHECK(is_gcd_set(GroupSubset::of_indices(z6, {1, 5})));

  const GroupSpec z8({8});
  CHECK(is_gcd_set(GroupSubset::of_indices(z8, {1, 3, 5, 7})));
  CHECK(!is_gcd_set(GroupSubset::of_indices(z8, {1, 7})));
}

TEST_CASE("gcd-sets sit inside the Boolean algebra") {
  for (const auto& moduli : {std::vector<std::int64_t>{24}, {4, 6}, {2, 2, 6}}) {
    const GroupSpec g(moduli);
    const AtomPartition p(g);
    for (const DivisorTuple& t : divisor_tuples(g)) {
      CHECK(in_boolean_algebra(p, elementary_gcd_set(g, t)));
    }
  }
}

TEST_CASE("cyclic groups: elementary gcd-sets coincide with atoms") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const GroupSpec g({n});
    std::set<std::vector<std::uint8_t>> gcd_masks, atom_masks;
    for (const DivisorTuple& t : divisor_tuples(g)) {
      gcd_masks.insert(elementary_gcd_set(g, t).mask());
    }
    for (const GroupSubset& atom : AtomPartition(g).atoms()) {
      atom_masks.insert(atom.mask());
    }
    CHECK(gcd_masks == atom_masks);
  }
}

TEST_CASE("Lemma 8: product structure of elementary gcd-sets") {
  for (std::int64_t m1 = 1; m1 <= 8; ++m1) {
    for (std::int64_t m2 = 1; m2 <= 8; ++m2) {
      const GroupSpec g({m1, m2});
      const GroupSpec g1({m1});
      const GroupSpec g2({m2});
      for (std::int64_t i = 0; i < g.order(); ++i) {
        const Element x = g.element_at(i);
        const GroupSubset whole = elementary_gcd_set(g, gcd_type(g, x));
        std::vector<Element> product;
        for (std::int64_t a : elementary_gcd_set(g1, gcd_type(g1, {x[0]})).indices()) {
          for (std::int64_t b : elementary_gcd_set(g2, gcd_type(g2, {x[1]})).indices()) {
            product.push_back({a, b});
          }
        }
        CHECK(whole == GroupSubset::of_elements(g, product));
      }
    }
  }
}

TEST_CASE("Lemma 9: sums of elementary gcd-sets are gcd-sets") {
  for (const auto& moduli :
       {std::vector<std::int64_t>{36}, {6, 6}, {4, 9}, {2, 12}, {5, 6}}) {
    const GroupSpec g(moduli);
    const auto tuples = divisor_tuples(g);
    for (const DivisorTuple& t1 : tuples) {
      for (const DivisorTuple& t2 : tuples) {
        CHECK(is_gcd_set(sumset(elementary_gcd_set(g, t1), elementary_gcd_set(g, t2))));
      }
    }
  }
}
