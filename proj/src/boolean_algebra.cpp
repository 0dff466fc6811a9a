#include "cayley/boolean_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cayley {

AtomPartition::AtomPartition(GroupSpec g) : group_(std::move(g)) {
  const std::int64_t n = group_.order();
  atom_index_.assign(static_cast<std::size_t>(n), static_cast<std::size_t>(-1));
  for (std::int64_t i = 0; i < n; ++i) {
    if (atom_index_[static_cast<std::size_t>(i)] != static_cast<std::size_t>(-1)) {
      continue;
    }
    GroupSubset atom = atom_of(group_, group_.element_at(i));
    std::size_t pos = atoms_.size();
    for (std::int64_t member : atom.indices()) {
      atom_index_[static_cast<std::size_t>(member)] = pos;
    }
    atoms_.push_back(std::move(atom));
  }
}

std::size_t AtomPartition::atom_index_of(std::int64_t element_index) const {
  if (element_index < 0 || element_index >= group_.order()) {
    throw std::invalid_argument("element index out of range");
  }
  return atom_index_[static_cast<std::size_t>(element_index)];
}

const GroupSubset& AtomPartition::atom_containing_index(std::int64_t element_index) const {
  return atoms_[atom_index_of(element_index)];
}

const GroupSubset& AtomPartition::atom_containing(const Element& x) const {
  return atoms_[atom_index_of(group_.index_of(x))];
}

std::string DivisorTuple::to_string() const {
  if (d.size() == 1) return std::to_string(d[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  out += ')';
  return out;
}

GroupSubset atom_of(const GroupSpec& g, const Element& a) {
  const std::int64_t ord = g.order_of(a);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  for (std::int64_t k = 1; k <= ord; ++k) {
    if (std::gcd(k, ord) == 1) {
      mask[static_cast<std::size_t>(g.index_of(g.scale(k, a)))] = 1;
    }
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

bool in_boolean_algebra(const AtomPartition& partition, const GroupSubset& s) {
  if (!(partition.group() == s.group())) {
    throw std::invalid_argument("subset and partition belong to different groups");
  }
  // S is a union of atoms iff each atom is fully inside or fully outside.
  for (const GroupSubset& atom : partition.atoms()) {
    bool any = false, all = true;
    for (std::int64_t i : atom.indices()) {
      if (s.contains_index(i)) {
        any = true;
      } else {
        all = false;
      }
    }
    if (any && !all) return false;
  }
  return true;
}

bool in_boolean_algebra(const GroupSubset& s) {
  return in_boolean_algebra(AtomPartition(s.group()), s);
}

GroupSubset sumset(const GroupSubset& s, const GroupSubset& t) {
  detail::require_same_group(s, t);
  const GroupSpec& g = s.group();
  if (s.is_empty() || t.is_empty()) return GroupSubset::empty(g);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  const std::vector<std::int64_t> left = s.indices();
  const std::vector<std::int64_t> right = t.indices();
  for (std::int64_t a : left) {
    for (std::int64_t b : right) {
      mask[static_cast<std::size_t>(g.add_index(a, b))] = 1;
    }
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

GroupSubset iterated_sumset(const GroupSubset& s, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("sumset multiplicity must be >= 0");
  GroupSubset acc = GroupSubset::of_indices(s.group(), {0});
  for (std::int64_t i = 0; i < d; ++i) {
    acc = sumset(acc, s);
  }
  return acc;
}

DivisorTuple gcd_type(const GroupSpec& g, const Element& x) {
  const Element r = g.reduce(x);
  DivisorTuple t;
  t.d.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    // std::gcd(0, m) == m, which is exactly the required convention.
    t.d[i] = std::gcd(r[i], g.moduli()[i]);
  }
  return t;
}

GroupSubset elementary_gcd_set(const GroupSpec& g, const DivisorTuple& d) {
  if (d.d.size() != g.factor_count()) {
    throw std::invalid_argument("divisor tuple length does not match factor count");
  }
  for (std::size_t i = 0; i < d.d.size(); ++i) {
    if (d.d[i] < 1 || g.moduli()[i] % d.d[i] != 0) {
      throw std::invalid_argument("tuple " + d.to_string() +
                                  " does not divide the moduli componentwise");
    }
  }
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (gcd_type(g, g.element_at(i)) == d) {
      mask[static_cast<std::size_t>(i)] = 1;
    }
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

std::vector<DivisorTuple> divisor_tuples(const GroupSpec& g) {
  std::vector<std::vector<std::int64_t>> per_coord;
  for (std::int64_t m : g.moduli()) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d == 0) divs.push_back(d);
    }
    per_coord.push_back(std::move(divs));
  }
  std::vector<DivisorTuple> out;
  DivisorTuple cur;
  cur.d.assign(g.factor_count(), 1);
  std::vector<std::size_t> pos(g.factor_count(), 0);
  for (;;) {
    for (std::size_t i = 0; i < pos.size(); ++i) cur.d[i] = per_coord[i][pos[i]];
    out.push_back(cur);
    // odometer, rightmost fastest
    std::size_t i = pos.size();
    while (i-- > 0) {
      if (++pos[i] < per_coord[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool is_gcd_set(const GroupSubset& s) {
  const GroupSpec& g = s.group();
  // S is a union of elementary gcd-sets iff within each gcd class it holds
  // either all members or none.
  std::map<std::vector<std::int64_t>, std::pair<std::int64_t, std::int64_t>> counts;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    DivisorTuple t = gcd_type(g, g.element_at(i));
    auto& [total, inside] = counts[t.d];
    ++total;
    if (s.contains_index(i)) ++inside;
  }
  for (const auto& [tuple, count] : counts) {
    if (count.second != 0 && count.second != count.first) return false;
  }
  return true;
}

}  // namespace cayley
