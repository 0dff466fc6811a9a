#include "cayley/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cayley {

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli, std::int64_t max_order)
    : moduli_(std::move(moduli)), max_order_(max_order) {
  if (moduli_.empty()) {
    throw std::invalid_argument("group needs at least one cyclic factor");
  }
  if (max_order_ < 1) {
    throw std::invalid_argument("group order cap must be positive");
  }
  order_ = 1;
  for (std::int64_t m : moduli_) {
    if (m < 1) {
      throw std::invalid_argument("cyclic modulus must be >= 1");
    }
    if (order_ > max_order_ / m) {
      throw ResourceError("group order exceeds cap " + std::to_string(max_order_));
    }
    order_ *= m;
  }
  stride_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size() - 1; i-- > 0;) {
    stride_[i] = stride_[i + 1] * moduli_[i + 1];
  }
}

GroupSpec GroupSpec::parse(std::string_view text, std::int64_t max_order) {
  std::vector<std::int64_t> moduli;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find('x', start);
    std::string_view tok = text.substr(
        start, sep == std::string_view::npos ? text.size() - start : sep - start);
    if (tok.empty()) {
      throw std::invalid_argument("empty factor in group spec '" + std::string(text) + "'");
    }
    std::int64_t value = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("non-numeric factor '" + std::string(tok) +
                                    "' in group spec");
      }
      value = value * 10 + (c - '0');
      if (value > max_order) {
        throw ResourceError("group order exceeds cap " + std::to_string(max_order));
      }
    }
    if (value == 0) {
      throw std::invalid_argument("modulus 0 is not a cyclic factor");
    }
    moduli.push_back(value);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return GroupSpec(std::move(moduli), max_order);
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

Element GroupSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw std::invalid_argument("element index out of range");
  }
  Element x(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    x[i] = (index / stride_[i]) % moduli_[i];
  }
  return x;
}

std::int64_t GroupSpec::index_of(const Element& x) const {
  check_element(x);
  std::int64_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t r = x[i] % moduli_[i];
    if (r < 0) r += moduli_[i];
    index += r * stride_[i];
  }
  return index;
}

std::vector<Element> GroupSpec::enumerate_elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) {
    out.push_back(element_at(i));
  }
  return out;
}

Element GroupSpec::reduce(const Element& x) const {
  check_element(x);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = x[i] % moduli_[i];
    if (r[i] < 0) r[i] += moduli_[i];
  }
  return r;
}

Element GroupSpec::add(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = (a[i] + b[i]) % moduli_[i];
    if (r[i] < 0) r[i] += moduli_[i];
  }
  return r;
}

Element GroupSpec::neg(const Element& a) const {
  check_element(a);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = (moduli_[i] - a[i] % moduli_[i]) % moduli_[i];
    if (r[i] < 0) r[i] += moduli_[i];
  }
  return r;
}

Element GroupSpec::scale(std::int64_t k, const Element& a) const {
  check_element(a);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t kk = k % moduli_[i];
    if (kk < 0) kk += moduli_[i];
    r[i] = (kk * (a[i] % moduli_[i])) % moduli_[i];
    if (r[i] < 0) r[i] += moduli_[i];
  }
  return r;
}

std::int64_t GroupSpec::order_of(const Element& a) const {
  check_element(a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t r = a[i] % moduli_[i];
    if (r < 0) r += moduli_[i];
    ord = std::lcm(ord, moduli_[i] / std::gcd(r, moduli_[i]));
  }
  return ord;
}

std::int64_t GroupSpec::add_index(std::int64_t a, std::int64_t b) const {
  return index_of(add(element_at(a), element_at(b)));
}

std::int64_t GroupSpec::neg_index(std::int64_t a) const {
  return index_of(neg(element_at(a)));
}

std::int64_t GroupSpec::sub_index(std::int64_t a, std::int64_t b) const {
  return index_of(add(element_at(a), neg(element_at(b))));
}

void GroupSpec::check_element(const Element& x) const {
  if (x.size() != moduli_.size()) {
    throw std::invalid_argument("element has " + std::to_string(x.size()) +
                                " coordinates, group has " +
                                std::to_string(moduli_.size()) + " factors");
  }
}

std::string element_to_string(const Element& x) {
  if (x.size() == 1) return std::to_string(x[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  out += ')';
  return out;
}

GroupSubset::GroupSubset(GroupSpec g, std::vector<std::uint8_t> mask)
    : group_(std::move(g)), mask_(std::move(mask)) {
  count_ = std::count(mask_.begin(), mask_.end(), std::uint8_t{1});
}

GroupSubset GroupSubset::empty(const GroupSpec& g) {
  return GroupSubset(g, std::vector<std::uint8_t>(static_cast<std::size_t>(g.order()), 0));
}

GroupSubset GroupSubset::full(const GroupSpec& g) {
  return GroupSubset(g, std::vector<std::uint8_t>(static_cast<std::size_t>(g.order()), 1));
}

GroupSubset GroupSubset::from_mask(const GroupSpec& g, std::vector<std::uint8_t> mask) {
  if (std::ssize(mask) != g.order()) {
    throw std::invalid_argument("membership mask length does not match group order");
  }
  for (auto& b : mask) b = b ? 1 : 0;
  return GroupSubset(g, std::move(mask));
}

GroupSubset GroupSubset::of_indices(const GroupSpec& g,
                                    const std::vector<std::int64_t>& indices) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  for (std::int64_t i : indices) {
    if (i < 0 || i >= g.order()) {
      throw std::invalid_argument("subset index " + std::to_string(i) +
                                  " out of range for group of order " +
                                  std::to_string(g.order()));
    }
    mask[static_cast<std::size_t>(i)] = 1;
  }
  return GroupSubset(g, std::move(mask));
}

GroupSubset GroupSubset::of_elements(const GroupSpec& g,
                                     const std::vector<Element>& elements) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  for (const Element& x : elements) {
    mask[static_cast<std::size_t>(g.index_of(x))] = 1;
  }
  return GroupSubset(g, std::move(mask));
}

bool GroupSubset::contains_index(std::int64_t i) const {
  if (i < 0 || i >= group_.order()) {
    throw std::invalid_argument("subset index out of range");
  }
  return mask_[static_cast<std::size_t>(i)] != 0;
}

bool GroupSubset::contains(const Element& x) const {
  return mask_[static_cast<std::size_t>(group_.index_of(x))] != 0;
}

std::vector<std::int64_t> GroupSubset::indices() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::int64_t i = 0; i < group_.order(); ++i) {
    if (mask_[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

std::vector<Element> GroupSubset::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::int64_t i : indices()) out.push_back(group_.element_at(i));
  return out;
}

bool GroupSubset::is_symmetric() const {
  for (std::int64_t i = 0; i < group_.order(); ++i) {
    if (mask_[static_cast<std::size_t>(i)] &&
        !mask_[static_cast<std::size_t>(group_.neg_index(i))]) {
      return false;
    }
  }
  return true;
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
  detail::require_same_group(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

GroupSubset GroupSubset::complement() const {
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) m[i] = mask_[i] ? 0 : 1;
  return GroupSubset(group_, std::move(m));
}

GroupSubset GroupSubset::united(const GroupSubset& other) const {
  detail::require_same_group(*this, other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) m[i] = mask_[i] | other.mask_[i];
  return GroupSubset(group_, std::move(m));
}

GroupSubset GroupSubset::intersected(const GroupSubset& other) const {
  detail::require_same_group(*this, other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) m[i] = mask_[i] & other.mask_[i];
  return GroupSubset(group_, std::move(m));
}

GroupSubset GroupSubset::minus(const GroupSubset& other) const {
  detail::require_same_group(*this, other);
  std::vector<std::uint8_t> m(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    m[i] = (mask_[i] && !other.mask_[i]) ? 1 : 0;
  }
  return GroupSubset(group_, std::move(m));
}

std::string GroupSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::int64_t i : indices()) {
    if (!first) out += ',';
    out += element_to_string(group_.element_at(i));
    first = false;
  }
  out += '}';
  return out;
}

GroupSubset cyclic_subgroup(const GroupSpec& g, const Element& a) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  Element cur(g.factor_count(), 0);
  do {
    mask[static_cast<std::size_t>(g.index_of(cur))] = 1;
    cur = g.add(cur, a);
  } while (g.index_of(cur) != 0);
  return GroupSubset::from_mask(g, std::move(mask));
}

GroupSubset subgroup_generated(const GroupSubset& s) {
  const GroupSpec& g = s.group();
  std::vector<std::int64_t> gens = s.indices();
  for (std::int64_t i : s.indices()) {
    std::int64_t ni = g.neg_index(i);
    if (!s.contains_index(ni)) gens.push_back(ni);
  }
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  mask[0] = 1;
  std::queue<std::int64_t> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    std::int64_t h = frontier.front();
    frontier.pop();
    for (std::int64_t gen : gens) {
      std::int64_t next = g.add_index(h, gen);
      if (!mask[static_cast<std::size_t>(next)]) {
        mask[static_cast<std::size_t>(next)] = 1;
        frontier.push(next);
      }
    }
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

namespace detail {
void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) {
    throw std::invalid_argument("subsets belong to different groups (" +
                                a.group().to_string() + " vs " +
                                b.group().to_string() + ")");
  }
}
}  // namespace detail

}  // namespace cayley
