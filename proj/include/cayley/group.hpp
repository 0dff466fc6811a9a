#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// One group element: a tuple of residues, one per cyclic factor.
using Element = std::vector<std::int64_t>;

/// Default cap on the group order. Dense n-by-n structures stay feasible below it.
inline constexpr std::int64_t kDefaultMaxGroupOrder = 4096;

/// A finite abelian group presented as Z_{n1} (+) ... (+) Z_{nk}.
///
/// The canonical enumeration of elements is lexicographic over the coordinate
/// ranges [0, ni), rightmost coordinate fastest, so the identity is element 0
/// and the enumeration is stable across calls. Every spectrum and matrix in
/// the library is expressed in this vertex order.
///
/// Moduli are not required to be prime powers; a modulus of 1 is allowed and
/// contributes a constant coordinate. Instances are immutable values.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli,
                     std::int64_t max_order = kDefaultMaxGroupOrder);

  /// Parses the textual syntax "6" or "2x4x3". Rejects 0 and non-numeric tokens.
  static GroupSpec parse(std::string_view text,
                         std::int64_t max_order = kDefaultMaxGroupOrder);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }
  std::size_t factor_count() const { return moduli_.size(); }
  std::int64_t max_order() const { return max_order_; }

  /// Inverse of parse: "2x4x3".
  std::string to_string() const;

  /// Element at a canonical-enumeration index in [0, order).
  Element element_at(std::int64_t index) const;

  /// Canonical index of an element; coordinates are reduced first, so any
  /// integer tuple of the right length is accepted.
  std::int64_t index_of(const Element& x) const;

  /// All elements in canonical order, identity first.
  std::vector<Element> enumerate_elements() const;

  /// Coordinatewise reduction modulo the moduli (handles negatives).
  Element reduce(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;

  /// k-fold sum of a; k may be negative or zero.
  Element scale(std::int64_t k, const Element& a) const;

  /// Order of a in the group: lcm_i(n_i / gcd(x_i, n_i)).
  std::int64_t order_of(const Element& a) const;

  // Index-space arithmetic over the canonical enumeration.
  std::int64_t add_index(std::int64_t a, std::int64_t b) const;
  std::int64_t neg_index(std::int64_t a) const;
  std::int64_t sub_index(std::int64_t a, std::int64_t b) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  void check_element(const Element& x) const;

  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> stride_;
  std::int64_t order_ = 1;
  std::int64_t max_order_ = kDefaultMaxGroupOrder;
};

/// "3" for single-factor groups, "(1,2)" otherwise.
std::string element_to_string(const Element& x);

/// A subset of a group under the canonical element enumeration, stored as a
/// dense membership mask. Immutable after construction; set operations return
/// new values.
class GroupSubset {
 public:
  static GroupSubset empty(const GroupSpec& g);
  static GroupSubset full(const GroupSpec& g);
  static GroupSubset from_mask(const GroupSpec& g, std::vector<std::uint8_t> mask);
  static GroupSubset of_indices(const GroupSpec& g,
                                const std::vector<std::int64_t>& indices);
  static GroupSubset of_elements(const GroupSpec& g,
                                 const std::vector<Element>& elements);

  const GroupSpec& group() const { return group_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  /// Number of members.
  std::int64_t size() const { return count_; }
  bool is_empty() const { return count_ == 0; }

  bool contains_index(std::int64_t i) const;
  bool contains(const Element& x) const;

  /// Member indices in ascending (canonical) order.
  std::vector<std::int64_t> indices() const;
  std::vector<Element> elements() const;

  /// S == -S.
  bool is_symmetric() const;

  bool is_subset_of(const GroupSubset& other) const;

  GroupSubset complement() const;
  GroupSubset united(const GroupSubset& other) const;
  GroupSubset intersected(const GroupSubset& other) const;
  GroupSubset minus(const GroupSubset& other) const;

  friend GroupSubset operator|(const GroupSubset& a, const GroupSubset& b) {
    return a.united(b);
  }
  friend GroupSubset operator&(const GroupSubset& a, const GroupSubset& b) {
    return a.intersected(b);
  }
  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.group_ == b.group_ && a.mask_ == b.mask_;
  }

  /// "{1,5}" for single-factor groups, "{(0,1),(1,2)}" otherwise.
  std::string to_string() const;

 private:
  GroupSubset(GroupSpec g, std::vector<std::uint8_t> mask);

  GroupSpec group_;
  std::vector<std::uint8_t> mask_;
  std::int64_t count_ = 0;
};

/// The cyclic group <a> = {k*a : 0 <= k < ord(a)}.
GroupSubset cyclic_subgroup(const GroupSpec& g, const Element& a);

/// Smallest subgroup containing S: the fixed point of closing S U {0} under
/// add and neg. The empty set generates {0}.
GroupSubset subgroup_generated(const GroupSubset& s);

namespace detail {
/// Throws if the two subsets live over different groups.
void require_same_group(const GroupSubset& a, const GroupSubset& b);
}  // namespace detail

}  // namespace cayley
