#include "cayley/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

#include "cayley/boolean_algebra.hpp"

namespace cayley {

std::string Distance::to_string() const {
  return is_infinite() ? "inf" : std::to_string(raw_);
}

Distance Distance::parse(std::string_view text) {
  if (text == "inf") return infinity();
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
    throw std::invalid_argument("bad distance '" + std::string(text) +
                                "' (expected a nonnegative integer or \"inf\")");
  }
  return finite(v);
}

CayleyGraph::CayleyGraph(GroupSubset shift) : shift_(std::move(shift)) {
  if (!shift_.is_symmetric()) {
    throw std::invalid_argument("Cayley graph shift set must satisfy S = -S");
  }
}

std::vector<std::vector<int>> CayleyGraph::adjacency_matrix() const {
  const GroupSpec& g = group();
  const std::int64_t n = g.order();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          shift_.contains_index(g.sub_index(j, i)) ? 1 : 0;
    }
  }
  return a;
}

bool DistanceProfile::contains(Distance d) const {
  return std::find(distances.begin(), distances.end(), d) != distances.end();
}

std::int64_t DistanceProfile::index_of(Distance d) const {
  const auto it = std::find(distances.begin(), distances.end(), d);
  if (it == distances.end()) {
    throw std::invalid_argument("distance " + d.to_string() + " not attained");
  }
  return it - distances.begin();
}

std::string DistanceProfile::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (i) out += ',';
    out += distances[i].to_string();
  }
  out += ')';
  return out;
}

std::vector<Distance> bfs_from_origin(const CayleyGraph& g) {
  const GroupSpec& spec = g.group();
  const std::int64_t n = spec.order();
  std::vector<Distance> dist(static_cast<std::size_t>(n), Distance::infinity());
  dist[0] = Distance::finite(0);
  std::queue<std::int64_t> frontier;
  frontier.push(0);
  const std::vector<std::int64_t> steps = g.shift().indices();
  while (!frontier.empty()) {
    const std::int64_t v = frontier.front();
    frontier.pop();
    const std::int64_t next_d = dist[static_cast<std::size_t>(v)].value() + 1;
    for (std::int64_t s : steps) {
      const std::int64_t w = spec.add_index(v, s);
      if (dist[static_cast<std::size_t>(w)].is_infinite()) {
        dist[static_cast<std::size_t>(w)] = Distance::finite(next_d);
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Distance>> bfs_distances(const CayleyGraph& g) {
  const GroupSpec& spec = g.group();
  const std::int64_t n = spec.order();
  const std::vector<Distance> row0 = bfs_from_origin(g);
  std::vector<std::vector<Distance>> d(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Distance> row(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(j)] = row0[static_cast<std::size_t>(spec.sub_index(j, i))];
    }
    d[static_cast<std::size_t>(i)] = std::move(row);
  }
  return d;
}

DistanceProfile distance_profile(const CayleyGraph& g) {
  std::vector<Distance> row0 = bfs_from_origin(g);
  std::sort(row0.begin(), row0.end());
  row0.erase(std::unique(row0.begin(), row0.end()), row0.end());
  return DistanceProfile{std::move(row0)};
}

std::vector<GroupSubset> finite_distance_shifts(const CayleyGraph& g) {
  const GroupSpec& spec = g.group();
  std::vector<GroupSubset> levels;
  levels.push_back(GroupSubset::of_indices(spec, {0}));  // 0S = {0}
  GroupSubset covered = levels[0];
  GroupSubset power = levels[0];
  for (;;) {
    power = sumset(power, g.shift());
    GroupSubset level = power.minus(covered);
    if (level.is_empty()) break;  // once empty, every later level is empty too
    levels.push_back(level);
    covered = covered.united(power);
  }
  return levels;
}

GroupSubset distance_power_shift(const CayleyGraph& g, const DistanceSet& d) {
  const GroupSpec& spec = g.group();
  GroupSubset result = GroupSubset::empty(spec);
  const std::vector<GroupSubset> levels = finite_distance_shifts(g);
  for (Distance dist : d) {
    if (dist.is_infinite()) {
      const GroupSubset reach = subgroup_generated(g.shift());
      if (reach.size() < spec.order()) {
        result = result.united(reach.complement());
      }
    } else if (dist.value() < std::ssize(levels)) {
      result = result.united(levels[static_cast<std::size_t>(dist.value())]);
    }
    // distances beyond the last nonempty level are not attained: empty share
  }
  return result;
}

CayleyGraph distance_power(const CayleyGraph& g, const DistanceSet& d) {
  return CayleyGraph(distance_power_shift(g, d));
}

std::vector<std::vector<std::int64_t>> generalized_distance_matrix(
    const CayleyGraph& g, const DistanceMatrixSpec& spec) {
  const DistanceProfile profile = distance_profile(g);
  if (std::ssize(spec.weights) != profile.size()) {
    throw std::invalid_argument(
        "weight tuple has " + std::to_string(spec.weights.size()) +
        " entries but the distance profile is " + profile.to_string());
  }
  const GroupSpec& group = g.group();
  const std::int64_t n = group.order();
  const std::vector<Distance> row0 = bfs_from_origin(g);
  std::vector<std::int64_t> weight_at(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    weight_at[static_cast<std::size_t>(j)] =
        spec.weights[static_cast<std::size_t>(profile.index_of(row0[static_cast<std::size_t>(j)]))];
  }
  std::vector<std::vector<std::int64_t>> m(
      static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          weight_at[static_cast<std::size_t>(group.sub_index(j, i))];
    }
  }
  return m;
}

Spectrum dm_spectrum(const CayleyGraph& g, const DistanceMatrixSpec& spec) {
  const DistanceProfile profile = distance_profile(g);
  if (std::ssize(spec.weights) != profile.size()) {
    throw std::invalid_argument(
        "weight tuple has " + std::to_string(spec.weights.size()) +
        " entries but the distance profile is " + profile.to_string());
  }
  const GroupSpec& group = g.group();
  const std::vector<GroupSubset> levels = finite_distance_shifts(g);
  std::vector<GroupSubset> class_shifts;
  class_shifts.reserve(static_cast<std::size_t>(profile.size()));
  for (Distance d : profile.distances) {
    if (d.is_infinite()) {
      // attained infinity means the graph is disconnected
      class_shifts.push_back(subgroup_generated(g.shift()).complement());
    } else {
      class_shifts.push_back(levels[static_cast<std::size_t>(d.value())]);
    }
  }
  std::vector<std::complex<double>> eigenvalues;
  eigenvalues.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t i = 0; i < group.order(); ++i) {
    const Element alpha = group.element_at(i);
    std::complex<double> ev = 0.0;
    for (std::int64_t t = 0; t < profile.size(); ++t) {
      ev += static_cast<double>(spec.weights[static_cast<std::size_t>(t)]) *
            character_sum(group, alpha, class_shifts[static_cast<std::size_t>(t)]);
    }
    eigenvalues.push_back(ev);
  }
  return Spectrum(group, std::move(eigenvalues));
}

}  // namespace cayley
