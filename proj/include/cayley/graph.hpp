#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/spectral.hpp"

namespace cayley {

/// A graph distance: a nonnegative integer or the distinguished value
/// infinity, which orders above every integer. No arithmetic is defined on
/// distances; only equality and ordering are ever needed.
class Distance {
 public:
  constexpr Distance() = default;

  static constexpr Distance finite(std::int64_t d) {
    return Distance(d >= 0 ? d : throw_negative());
  }
  static constexpr Distance infinity() { return Distance(kInfinityRaw); }

  constexpr bool is_infinite() const { return raw_ == kInfinityRaw; }

  /// Finite value; throws on infinity.
  constexpr std::int64_t value() const {
    if (is_infinite()) throw std::invalid_argument("distance is infinite");
    return raw_;
  }

  friend constexpr bool operator==(Distance a, Distance b) = default;
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    // kInfinityRaw is negative, so map it above all finite values explicitly.
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.raw_ <=> b.raw_;
  }

  std::string to_string() const;
  /// Accepts a nonnegative integer or "inf".
  static Distance parse(std::string_view text);

 private:
  static constexpr std::int64_t kInfinityRaw = -1;
  constexpr explicit Distance(std::int64_t raw) : raw_(raw) {}
  [[noreturn]] static std::int64_t throw_negative() {
    throw std::invalid_argument("finite distance must be >= 0");
  }

  std::int64_t raw_ = 0;
};

using DistanceSet = std::set<Distance>;

/// An undirected Cayley graph Cay(G, S): vertices are the group elements in
/// canonical order, i and j adjacent iff v_j - v_i lies in the (symmetric)
/// shift set. 0 in S puts a loop at every vertex.
class CayleyGraph {
 public:
  explicit CayleyGraph(GroupSubset shift);

  const GroupSpec& group() const { return shift_.group(); }
  const GroupSubset& shift() const { return shift_; }

  /// Dense 0/1 adjacency in canonical vertex order.
  std::vector<std::vector<int>> adjacency_matrix() const;

 private:
  GroupSubset shift_;
};

/// The sorted distinct distances attained in a graph: starts at 0 and ends in
/// infinity exactly when the graph is disconnected.
struct DistanceProfile {
  std::vector<Distance> distances;

  std::int64_t size() const { return std::ssize(distances); }
  bool contains(Distance d) const;
  /// Position of d in the profile; throws if not attained.
  std::int64_t index_of(Distance d) const;

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
  std::string to_string() const;
};

/// Integer weights k_t, one per profile entry, defining the generalized
/// distance matrix with entry k_t at pairs of distance d_t.
struct DistanceMatrixSpec {
  std::vector<std::int64_t> weights;
};

/// Distances from vertex 0 to every vertex, by breadth-first search over the
/// shift set. Loops never shorten a path; unreachable vertices get infinity.
std::vector<Distance> bfs_from_origin(const CayleyGraph& g);

/// Full distance matrix d(x, y); row x is row 0 translated by x, which is the
/// vertex-transitivity of Cayley graphs.
std::vector<std::vector<Distance>> bfs_distances(const CayleyGraph& g);

DistanceProfile distance_profile(const CayleyGraph& g);

/// The shift sets realizing each finite distance power as a Cayley graph:
/// entry d is dS minus all smaller iterated sumsets (entry 0 is {0}). The
/// list stops after the last nonempty entry; larger finite distances
/// contribute the empty set.
std::vector<GroupSubset> finite_distance_shifts(const CayleyGraph& g);

/// Shift set S^(D) with x in S^(D) iff d(0, x) lies in D. Distances not
/// attained contribute nothing; infinity contributes the complement of the
/// subgroup generated by S when the graph is disconnected.
GroupSubset distance_power_shift(const CayleyGraph& g, const DistanceSet& d);

/// The distance power as a Cayley graph over the same group.
CayleyGraph distance_power(const CayleyGraph& g, const DistanceSet& d);

/// Entry (i, j) is weights[t] where d(v_i, v_j) is the t-th profile distance.
/// The weight list must align with the distance profile.
std::vector<std::vector<std::int64_t>> generalized_distance_matrix(
    const CayleyGraph& g, const DistanceMatrixSpec& spec);

/// Exact spectrum of the generalized distance matrix: the eigenvalue at
/// character alpha is sum_t k_t * psi_alpha(S^(d_t)).
Spectrum dm_spectrum(const CayleyGraph& g, const DistanceMatrixSpec& spec);

}  // namespace cayley
