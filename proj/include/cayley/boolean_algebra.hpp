#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// The atoms of the Boolean algebra generated by the subgroups of a group:
/// two elements share an atom exactly when they generate the same cyclic
/// subgroup. Atoms are pairwise disjoint, cover the group, and are ordered by
/// their smallest canonical index, so the atom containing 0 is always first
/// and equals {0}.
///
/// Computed once per group and reused; every integrality query goes through
/// this partition.
class AtomPartition {
 public:
  explicit AtomPartition(GroupSpec g);

  const GroupSpec& group() const { return group_; }
  const std::vector<GroupSubset>& atoms() const { return atoms_; }

  std::size_t atom_index_of(std::int64_t element_index) const;
  const GroupSubset& atom_containing_index(std::int64_t element_index) const;
  const GroupSubset& atom_containing(const Element& x) const;

 private:
  GroupSpec group_;
  std::vector<GroupSubset> atoms_;
  std::vector<std::size_t> atom_index_;
};

/// Componentwise divisor tuple of the group moduli; indexes an elementary
/// gcd-set.
struct DivisorTuple {
  std::vector<std::int64_t> d;

  friend bool operator==(const DivisorTuple& a, const DivisorTuple& b) = default;
  std::string to_string() const;
};

/// The atom represented by a: {k*a : 1 <= k <= ord(a), gcd(k, ord(a)) = 1}.
/// Its cardinality is Euler-phi(ord(a)).
GroupSubset atom_of(const GroupSpec& g, const Element& a);

/// True iff S is a (possibly empty) union of whole atoms, which is the
/// membership criterion for the Boolean algebra generated by the subgroups.
bool in_boolean_algebra(const AtomPartition& partition, const GroupSubset& s);

/// Convenience overload that computes the partition on the fly.
bool in_boolean_algebra(const GroupSubset& s);

/// Exact sumset {s + t}. Empty operands absorb: the result is empty whenever
/// either side is.
GroupSubset sumset(const GroupSubset& s, const GroupSubset& t);

/// d-fold sumset with 0S = {0}.
GroupSubset iterated_sumset(const GroupSubset& s, std::int64_t d);

/// Componentwise gcd(x_i, m_i) with the convention gcd(0, m_i) = m_i.
DivisorTuple gcd_type(const GroupSpec& g, const Element& x);

/// The elementary gcd-set S(d) = {x : gcd(x, m) = d componentwise}. These
/// sets, over all divisor tuples, partition the group.
GroupSubset elementary_gcd_set(const GroupSpec& g, const DivisorTuple& d);

/// All divisor tuples of the moduli, enumerated lexicographically with
/// ascending divisors per coordinate, rightmost coordinate fastest.
std::vector<DivisorTuple> divisor_tuples(const GroupSpec& g);

/// True iff S is a union of whole elementary gcd-sets.
bool is_gcd_set(const GroupSubset& s);

}  // namespace cayley
