#include "cayley/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "cayley/boolean_algebra.hpp"
#include "cayley/graph.hpp"
#include "cayley/spectral.hpp"

namespace cayley::verify {

namespace {

constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr std::int64_t kClosureOrderCap = 24;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> numeric_eigenvalues(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m[i][j] - m[j][i]) > 1e-12) {
        throw std::invalid_argument("matrix is not symmetric");
      }
    }
  }
  if (n == 0) return {};

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = 0.5 * (m[i][j] + m[j][i]);
    }
  }

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kJacobiOffTol) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double root = std::sqrt(1.0 + tau * tau);
        const double t = tau >= 0.0 ? 1.0 / (tau + root) : 1.0 / (tau - root);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with the rotation J acting on coordinates p, q
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r];
          const double aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
      }
    }
  }
  throw std::runtime_error("Jacobi iteration did not converge");
}

std::vector<GroupSubset> boolean_closure_oracle(const GroupSpec& g) {
  const std::int64_t n = g.order();
  if (n > kClosureOrderCap) {
    throw ResourceError("Boolean closure is capped at group order " +
                        std::to_string(kClosureOrderCap));
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<std::uint32_t> family;
  auto push = [&](std::uint32_t mask) {
    if (!seen[mask]) {
      seen[mask] = true;
      family.push_back(mask);
    }
  };

  for (std::int64_t a = 0; a < n; ++a) {
    std::uint32_t mask = 0;
    for (std::int64_t i : cyclic_subgroup(g, g.element_at(a)).indices()) {
      mask |= 1u << i;
    }
    push(mask);
  }

  // Worklist closure: each member gets combined with every earlier member, so
  // the family is a fixed point under union, intersection and complement when
  // the scan completes.
  for (std::size_t i = 0; i < family.size(); ++i) {
    push(~family[i] & full);
    for (std::size_t j = 0; j <= i; ++j) {
      push(family[i] | family[j]);
      push(family[i] & family[j]);
    }
  }

  std::sort(family.begin(), family.end());
  std::vector<GroupSubset> out;
  out.reserve(family.size());
  for (std::uint32_t mask : family) {
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < n; ++i) {
      bytes[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    }
    out.push_back(GroupSubset::from_mask(g, std::move(bytes)));
  }
  return out;
}

std::complex<double> inclusion_exclusion_f(const GroupSpec& g,
                                           const std::vector<GroupSubset>& subgroups,
                                           const Element& alpha) {
  const std::size_t k = subgroups.size();
  std::complex<double> total = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    GroupSubset inter = GroupSubset::full(g);
    int picked = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        inter = inter.intersected(subgroups[j]);
        ++picked;
      }
    }
    const double sign = picked % 2 == 1 ? 1.0 : -1.0;
    total += sign * character_sum(g, alpha, inter);
  }
  return total;
}

// ---------------------------------------------------------------------------
// cross_check_suite
// ---------------------------------------------------------------------------

namespace {

struct Recorder {
  OracleReport* report;

  void record(const std::string& check, const std::string& input, bool ok,
              std::string expected = "", std::string actual = "") {
    ++report->checks_run;
    if (!ok) {
      report->failures.push_back({check, input, std::move(expected), std::move(actual)});
    }
  }
};

/// Representatives of the {x, -x} classes; toggling whole classes enumerates
/// exactly the symmetric subsets.
std::vector<std::vector<std::int64_t>> symmetric_classes(const GroupSpec& g) {
  std::vector<std::vector<std::int64_t>> classes;
  std::vector<bool> done(static_cast<std::size_t>(g.order()), false);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    const std::int64_t ni = g.neg_index(i);
    done[static_cast<std::size_t>(i)] = true;
    std::vector<std::int64_t> cls{i};
    if (ni != i) {
      done[static_cast<std::size_t>(ni)] = true;
      cls.push_back(ni);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

GroupSubset subset_from_class_bits(const GroupSpec& g,
                                   const std::vector<std::vector<std::int64_t>>& classes,
                                   std::uint64_t bits) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (bits & (std::uint64_t{1} << c)) {
      for (std::int64_t i : classes[c]) mask[static_cast<std::size_t>(i)] = 1;
    }
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

/// Exhaustive for order <= 8, otherwise budget.random_subsets random draws.
std::vector<GroupSubset> sample_symmetric_subsets(const GroupSpec& g,
                                                  const SamplingBudget& budget,
                                                  std::mt19937_64& rng) {
  const auto classes = symmetric_classes(g);
  std::vector<GroupSubset> out;
  if (g.order() <= 8) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << classes.size()); ++bits) {
      out.push_back(subset_from_class_bits(g, classes, bits));
    }
  } else {
    for (int i = 0; i < budget.random_subsets; ++i) {
      std::uint64_t bits = rng();
      if (classes.size() < 64) bits &= (std::uint64_t{1} << classes.size()) - 1;
      out.push_back(subset_from_class_bits(g, classes, bits));
    }
  }
  return out;
}

GroupSubset union_of_atoms(const AtomPartition& partition, std::uint64_t bits) {
  GroupSubset s = GroupSubset::empty(partition.group());
  for (std::size_t a = 0; a < partition.atoms().size(); ++a) {
    if (bits & (std::uint64_t{1} << a)) s = s.united(partition.atoms()[a]);
  }
  return s;
}

/// Exhaustive unions of atoms when there are at most 8 atoms, random otherwise.
std::vector<GroupSubset> sample_atom_unions(const AtomPartition& partition,
                                            const SamplingBudget& budget,
                                            std::mt19937_64& rng) {
  const std::size_t k = partition.atoms().size();
  std::vector<GroupSubset> out;
  if (k <= 8) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      out.push_back(union_of_atoms(partition, bits));
    }
  } else {
    for (int i = 0; i < budget.random_subsets; ++i) {
      std::uint64_t bits = rng();
      if (k < 64) bits &= (std::uint64_t{1} << k) - 1;
      out.push_back(union_of_atoms(partition, bits));
    }
  }
  return out;
}

bool multisets_close(const std::vector<double>& a, const std::vector<double>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

std::vector<std::vector<double>> to_doubles(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<double>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].assign(m[i].begin(), m[i].end());
  }
  return out;
}

std::vector<DistanceSet> sample_distance_sets(const DistanceProfile& profile,
                                              const SamplingBudget& budget,
                                              std::mt19937_64& rng) {
  std::vector<DistanceSet> out;
  const std::size_t r = static_cast<std::size_t>(profile.size());
  if (r <= 5) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
      DistanceSet d;
      for (std::size_t t = 0; t < r; ++t) {
        if (bits & (std::uint64_t{1} << t)) d.insert(profile.distances[t]);
      }
      out.push_back(std::move(d));
    }
  } else {
    for (int i = 0; i < budget.random_distance_sets; ++i) {
      std::uint64_t bits = rng();
      DistanceSet d;
      for (std::size_t t = 0; t < r; ++t) {
        if (bits & (std::uint64_t{1} << (t % 64))) d.insert(profile.distances[t]);
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

void check_atom_partition(const GroupSpec& g, const AtomPartition& partition,
                          Recorder& rec) {
  const std::int64_t n = g.order();
  std::int64_t covered = 0;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const GroupSubset& atom : partition.atoms()) {
    covered += atom.size();
    for (std::int64_t i : atom.indices()) ++hits[static_cast<std::size_t>(i)];
  }
  rec.record("atoms.partition", "sum of atom sizes", covered == n,
             std::to_string(n), std::to_string(covered));
  const bool disjoint_cover =
      std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  rec.record("atoms.partition", "each element in exactly one atom", disjoint_cover);
  rec.record("atoms.partition", "atom of 0 is {0}",
             partition.atoms()[0] == GroupSubset::of_indices(g, {0}),
             "{0}", partition.atoms()[0].to_string());
  for (const GroupSubset& atom : partition.atoms()) {
    const auto idx = atom.indices();
    const std::int64_t ord = g.order_of(g.element_at(idx[0]));
    const bool equal_orders =
        std::all_of(idx.begin(), idx.end(),
                    [&](std::int64_t i) { return g.order_of(g.element_at(i)) == ord; });
    rec.record("atoms.equal_order", "atom " + atom.to_string(), equal_orders);
  }
}

void check_prop1a(const GroupSpec& g, const AtomPartition& partition,
                  const std::vector<GroupSubset>& atom_unions, Recorder& rec) {
  for (const GroupSubset& s : atom_unions) {
    bool ok = true;
    for (std::int64_t i = 0; i < g.order() && ok; ++i) {
      const GroupSubset& atom = partition.atom_containing_index(i);
      const bool inside = atom.is_subset_of(s);
      const bool outside = atom.intersected(s).is_empty();
      ok = inside || outside;
    }
    rec.record("atoms.prop1a", "S=" + s.to_string(), ok);
  }
}

void check_prop1b(const GroupSpec& g, Recorder& rec) {
  if (g.order() > 24) return;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const Element a = g.element_at(i);
    const std::int64_t ord = g.order_of(a);
    GroupSubset proper_union = GroupSubset::empty(g);
    for (std::int64_t q = 1; q < ord; ++q) {
      if (ord % q == 0) {
        // the subgroup of <a> with q elements is generated by (ord/q) * a
        proper_union = proper_union.united(cyclic_subgroup(g, g.scale(ord / q, a)));
      }
    }
    const GroupSubset oracle = cyclic_subgroup(g, a).minus(proper_union);
    const GroupSubset atom = atom_of(g, a);
    rec.record("atoms.prop1b", "a=" + element_to_string(a), atom == oracle,
               oracle.to_string(), atom.to_string());
  }
}

void check_theorem1(const GroupSpec& g, const AtomPartition& partition,
                    const SamplingBudget& budget, std::mt19937_64& rng, Recorder& rec) {
  const auto& atoms = partition.atoms();
  const std::size_t k = atoms.size();
  auto run_pair = [&](std::size_t i, std::size_t j) {
    const GroupSubset sum = sumset(atoms[i], atoms[j]);
    rec.record("sumsets.theorem1",
               atoms[i].to_string() + "+" + atoms[j].to_string(),
               in_boolean_algebra(partition, sum), "union of atoms", sum.to_string());
  };
  if (g.order() <= 16) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) run_pair(i, j);
    }
  } else {
    for (int t = 0; t < budget.random_subsets; ++t) {
      run_pair(rng() % k, rng() % k);
    }
  }
}

void check_gcd_sets(const GroupSpec& g, const AtomPartition& partition, Recorder& rec) {
  const auto tuples = divisor_tuples(g);

  if (g.order() <= 24) {
    for (const DivisorTuple& t : tuples) {
      const GroupSubset s = elementary_gcd_set(g, t);
      rec.record("gcd.subalgebra", "S(" + t.to_string() + ")",
                 in_boolean_algebra(partition, s), "union of atoms", s.to_string());
    }
  }

  // Elementary gcd-sets partition the group.
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const DivisorTuple& t : tuples) {
    for (std::int64_t i : elementary_gcd_set(g, t).indices()) {
      ++hits[static_cast<std::size_t>(i)];
    }
  }
  rec.record("gcd.partition", "each element in exactly one elementary set",
             std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

  if (g.factor_count() == 1 && g.order() <= 30) {
    std::set<std::vector<std::uint8_t>> elem_masks, atom_masks;
    for (const DivisorTuple& t : tuples) elem_masks.insert(elementary_gcd_set(g, t).mask());
    for (const GroupSubset& a : partition.atoms()) atom_masks.insert(a.mask());
    rec.record("gcd.cyclic_atoms", "elementary gcd-sets vs atoms",
               elem_masks == atom_masks);
  }

  if (g.factor_count() == 2 && g.moduli()[0] <= 8 && g.moduli()[1] <= 8) {
    const GroupSpec g1({g.moduli()[0]}, g.max_order());
    const GroupSpec g2({g.moduli()[1]}, g.max_order());
    for (std::int64_t i = 0; i < g.order(); ++i) {
      const Element x = g.element_at(i);
      const GroupSubset whole = elementary_gcd_set(g, gcd_type(g, x));
      const GroupSubset part1 = elementary_gcd_set(g1, gcd_type(g1, {x[0]}));
      const GroupSubset part2 = elementary_gcd_set(g2, gcd_type(g2, {x[1]}));
      std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.order()), 0);
      for (std::int64_t a : part1.indices()) {
        for (std::int64_t b : part2.indices()) {
          mask[static_cast<std::size_t>(g.index_of({a, b}))] = 1;
        }
      }
      rec.record("gcd.lemma8_product", "x=" + element_to_string(x),
                 whole == GroupSubset::from_mask(g, std::move(mask)));
    }
  }

  if (g.order() <= 36) {
    for (const DivisorTuple& t1 : tuples) {
      for (const DivisorTuple& t2 : tuples) {
        const GroupSubset sum =
            sumset(elementary_gcd_set(g, t1), elementary_gcd_set(g, t2));
        rec.record("gcd.lemma9_sumsets",
                   "S(" + t1.to_string() + ")+S(" + t2.to_string() + ")",
                   is_gcd_set(sum), "gcd-set", sum.to_string());
      }
    }
  }
}

void check_orthogonality(const GroupSpec& g, Recorder& rec) {
  if (g.order() > 24) return;
  const CharacterMatrix h = character_matrix(g);
  const double defect = h.orthogonality_defect();
  const double tol = kIdentityTolScale * static_cast<double>(g.order());
  rec.record("spectral.orthogonality", "max residual of H conj(H)^T - nI",
             defect < tol, "< " + std::to_string(tol), std::to_string(defect));
}

void check_eigenvector_property(const GroupSpec& g,
                                const std::vector<GroupSubset>& symmetric_subsets,
                                Recorder& rec) {
  if (g.order() > 24) return;
  const std::int64_t n = g.order();
  const double tol = kIdentityTolScale * static_cast<double>(n);
  std::size_t tested = 0;
  for (const GroupSubset& s : symmetric_subsets) {
    if (tested++ >= 8) break;  // exhaustive characters, a few shifts
    const CayleyGraph graph(s);
    const auto a = graph.adjacency_matrix();
    for (std::int64_t ci = 0; ci < n; ++ci) {
      const Element alpha = g.element_at(ci);
      const std::complex<double> ev = character_sum(g, alpha, s);
      double worst = 0.0;
      for (std::int64_t i = 0; i < n; ++i) {
        std::complex<double> row = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
          if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            row += character_value(g, alpha, g.element_at(j));
          }
        }
        row -= ev * character_value(g, alpha, g.element_at(i));
        worst = std::max(worst, std::abs(row));
      }
      rec.record("spectral.eigenvector",
                 "S=" + s.to_string() + " alpha=" + element_to_string(alpha),
                 worst < tol, "< " + std::to_string(tol), std::to_string(worst));
    }
  }
}

void check_lemma3(const GroupSpec& g, Recorder& rec) {
  if (g.order() > 24) return;
  const double tol = kIdentityTolScale * static_cast<double>(g.order());
  std::set<std::vector<std::uint8_t>> seen;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const GroupSubset h = cyclic_subgroup(g, g.element_at(i));
    if (!seen.insert(h.mask()).second) continue;
    for (std::int64_t ci = 0; ci < g.order(); ++ci) {
      const Element alpha = g.element_at(ci);
      const std::complex<double> sum = character_sum(g, alpha, h);
      bool trivial_on_h = true;
      for (std::int64_t hi : h.indices()) {
        if (std::abs(character_value(g, alpha, g.element_at(hi)) - 1.0) > tol) {
          trivial_on_h = false;
          break;
        }
      }
      const double target = trivial_on_h ? static_cast<double>(h.size()) : 0.0;
      rec.record("spectral.lemma3",
                 "H=" + h.to_string() + " alpha=" + element_to_string(alpha),
                 std::abs(sum - target) < tol, std::to_string(target),
                 std::to_string(sum.real()) + "+" + std::to_string(sum.imag()) + "i");
    }
  }
}

void check_cor1(const GroupSpec& g, const std::vector<GroupSubset>& atom_unions,
                Recorder& rec) {
  const double tol = kIdentityTolScale * static_cast<double>(g.order());
  for (const GroupSubset& s : atom_unions) {
    bool ok = true;
    for (std::int64_t ci = 0; ci < g.order() && ok; ++ci) {
      const std::complex<double> sum = character_sum(g, g.element_at(ci), s);
      ok = std::abs(sum.imag()) < tol &&
           std::abs(sum.real() - std::round(sum.real())) < tol;
    }
    rec.record("spectral.cor1_integral_sums", "S=" + s.to_string(), ok);
  }
}

void check_theorem2_and_friends(const AtomPartition& partition,
                                const std::vector<GroupSubset>& symmetric_subsets,
                                Recorder& rec) {
  for (const GroupSubset& s : symmetric_subsets) {
    const IntegralityVerdict v = integrality_verdicts(s);
    rec.record("spectral.theorem2", "S=" + s.to_string(), v.agree(),
               v.structural ? "integral" : "non-integral",
               v.spectral ? "integral" : "non-integral");
    if (v.spectral) {
      bool atoms_inside = true;
      for (std::int64_t i : s.indices()) {
        if (!partition.atom_containing_index(i).is_subset_of(s)) {
          atoms_inside = false;
          break;
        }
      }
      rec.record("spectral.lemma6", "S=" + s.to_string(), atoms_inside);
    }
    const GroupSubset back = recover_subset(spectrum(s));
    rec.record("spectral.recover_roundtrip", "S=" + s.to_string(), back == s,
               s.to_string(), back.to_string());
  }
}

void check_graph_properties(const GroupSpec& g, const AtomPartition& partition,
                            const std::vector<GroupSubset>& symmetric_subsets,
                            const SamplingBudget& budget, std::mt19937_64& rng,
                            Recorder& rec) {
  const std::int64_t n = g.order();
  std::size_t tested = 0;
  for (const GroupSubset& s : symmetric_subsets) {
    if (tested++ >= 16) break;
    const CayleyGraph graph(s);
    const std::vector<Distance> row0 = bfs_from_origin(graph);
    const DistanceProfile profile = distance_profile(graph);

    // Attained distance classes partition the group.
    {
      std::vector<int> hits(static_cast<std::size_t>(n), 0);
      for (Distance d : profile.distances) {
        for (std::int64_t i : distance_power_shift(graph, DistanceSet{d}).indices()) {
          ++hits[static_cast<std::size_t>(i)];
        }
      }
      rec.record("graph.shift_partition", "S=" + s.to_string(),
                 std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }

    // Vertex transitivity: every row is a permutation of row 0.
    if (n <= 64) {
      const auto full = bfs_distances(graph);
      std::vector<Distance> base = row0;
      std::sort(base.begin(), base.end());
      bool ok = true;
      for (const auto& row : full) {
        std::vector<Distance> sorted_row = row;
        std::sort(sorted_row.begin(), sorted_row.end());
        if (sorted_row != base) {
          ok = false;
          break;
        }
      }
      rec.record("graph.vertex_transitivity", "S=" + s.to_string(), ok);
    }

    const bool s_integral = in_boolean_algebra(partition, s);
    for (const DistanceSet& d : sample_distance_sets(profile, budget, rng)) {
      const GroupSubset shift = distance_power_shift(graph, d);
      bool ok = true;
      for (std::int64_t x = 0; x < n && ok; ++x) {
        const bool by_bfs = d.contains(row0[static_cast<std::size_t>(x)]);
        ok = shift.contains_index(x) == by_bfs;
      }
      std::string dstr = "{";
      for (Distance dd : d) dstr += dd.to_string() + ",";
      dstr += "}";
      rec.record("graph.theorem3_bfs", "S=" + s.to_string() + " D=" + dstr, ok);
      if (s_integral) {
        rec.record("graph.theorem3_closure", "S=" + s.to_string() + " D=" + dstr,
                   in_boolean_algebra(partition, shift), "union of atoms",
                   shift.to_string());
      }
    }

    // Distance-matrix spectra for integral shifts.
    if (s_integral && n <= 24) {
      std::uniform_int_distribution<std::int64_t> weight(-5, 5);
      for (int t = 0; t < budget.random_weight_tuples; ++t) {
        DistanceMatrixSpec spec;
        spec.weights.resize(static_cast<std::size_t>(profile.size()));
        for (auto& w : spec.weights) w = weight(rng);
        const Spectrum dm = dm_spectrum(graph, spec);
        std::string kstr = "k=(";
        for (std::size_t i = 0; i < spec.weights.size(); ++i) {
          if (i) kstr += ',';
          kstr += std::to_string(spec.weights[i]);
        }
        kstr += ')';
        rec.record("graph.theorem4_integral", "S=" + s.to_string() + " " + kstr,
                   dm.all_integral(kIntegralityTol));
        const auto numeric =
            numeric_eigenvalues(to_doubles(generalized_distance_matrix(graph, spec)));
        rec.record("graph.theorem4_multiset", "S=" + s.to_string() + " " + kstr,
                   multisets_close(dm.sorted_real_parts(), numeric, 1e-6));
      }
    }
  }

  // Theorem 5: gcd distance powers stay gcd-sets on two-factor groups.
  if (g.factor_count() == 2 && g.moduli()[0] <= 6 && g.moduli()[1] <= 6) {
    const auto tuples = divisor_tuples(g);
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << tuples.size()); ++bits) {
      if (count++ >= 128) break;
      GroupSubset s = GroupSubset::empty(g);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (bits & (std::uint64_t{1} << t)) {
          s = s.united(elementary_gcd_set(g, tuples[t]));
        }
      }
      const CayleyGraph graph(s);
      const DistanceProfile profile = distance_profile(graph);
      for (const DistanceSet& d : sample_distance_sets(profile, budget, rng)) {
        const GroupSubset shift = distance_power_shift(graph, d);
        rec.record("graph.theorem5_gcd", "S=" + s.to_string(), is_gcd_set(shift),
                   "gcd-set", shift.to_string());
      }
    }
  }
}

void check_closure_oracle(const GroupSpec& g, const AtomPartition& partition,
                          Recorder& rec) {
  const bool in_scope =
      g.order() <= 12 || (g.order() <= 24 && g.factor_count() <= 2);
  if (!in_scope || partition.atoms().size() > 20) return;
  const auto family = boolean_closure_oracle(g);
  std::set<std::vector<std::uint8_t>> closure_masks;
  for (const GroupSubset& s : family) closure_masks.insert(s.mask());
  std::set<std::vector<std::uint8_t>> union_masks;
  const std::size_t k = partition.atoms().size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    union_masks.insert(union_of_atoms(partition, bits).mask());
  }
  rec.record("verify.closure_oracle", "closure family vs atom unions",
             closure_masks == union_masks,
             std::to_string(union_masks.size()) + " sets",
             std::to_string(closure_masks.size()) + " sets");
}

void check_inclusion_exclusion(const GroupSpec& g, const SamplingBudget& budget,
                               std::mt19937_64& rng, Recorder& rec) {
  if (g.order() > 24) return;
  const double tol = kIdentityTolScale * static_cast<double>(g.order());
  for (int t = 0; t < std::min(budget.random_subsets, 12); ++t) {
    const std::size_t count = 1 + rng() % 3;
    std::vector<GroupSubset> subgroups;
    GroupSubset direct_union = GroupSubset::empty(g);
    for (std::size_t i = 0; i < count; ++i) {
      const GroupSubset h =
          cyclic_subgroup(g, g.element_at(static_cast<std::int64_t>(rng() % g.order())));
      direct_union = direct_union.united(h);
      subgroups.push_back(h);
    }
    for (std::int64_t ci = 0; ci < g.order(); ++ci) {
      const Element alpha = g.element_at(ci);
      const std::complex<double> by_ie = inclusion_exclusion_f(g, subgroups, alpha);
      const std::complex<double> direct = character_sum(g, alpha, direct_union);
      rec.record("verify.inclusion_exclusion",
                 "k=" + std::to_string(count) + " alpha=" + element_to_string(alpha),
                 std::abs(by_ie - direct) < tol);
    }
  }
}

void check_spectrum_vs_numeric(const GroupSpec& g,
                               const std::vector<GroupSubset>& symmetric_subsets,
                               Recorder& rec) {
  if (g.order() > 24) return;
  std::size_t tested = 0;
  for (const GroupSubset& s : symmetric_subsets) {
    if (tested++ >= 16) break;
    const CayleyGraph graph(s);
    const auto a = graph.adjacency_matrix();
    std::vector<std::vector<double>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
    const auto numeric = numeric_eigenvalues(m);
    rec.record("verify.spectrum_vs_numeric", "S=" + s.to_string(),
               multisets_close(spectrum(s).sorted_real_parts(), numeric, 1e-6));
  }
}

}  // namespace

OracleReport cross_check_suite(const GroupSpec& g, const SamplingBudget& budget) {
  OracleReport report;
  report.group = g.to_string();
  report.seed = budget.seed;
  Recorder rec{&report};
  std::mt19937_64 rng(budget.seed);

  const AtomPartition partition(g);
  const std::vector<GroupSubset> symmetric_subsets =
      sample_symmetric_subsets(g, budget, rng);
  const std::vector<GroupSubset> atom_unions = sample_atom_unions(partition, budget, rng);

  check_atom_partition(g, partition, rec);
  check_prop1a(g, partition, atom_unions, rec);
  check_prop1b(g, rec);
  check_theorem1(g, partition, budget, rng, rec);
  check_gcd_sets(g, partition, rec);
  check_orthogonality(g, rec);
  check_eigenvector_property(g, symmetric_subsets, rec);
  check_lemma3(g, rec);
  check_cor1(g, atom_unions, rec);
  check_theorem2_and_friends(partition, symmetric_subsets, rec);
  check_graph_properties(g, partition, symmetric_subsets, budget, rng, rec);
  check_closure_oracle(g, partition, rec);
  check_inclusion_exclusion(g, budget, rng, rec);
  check_spectrum_vs_numeric(g, symmetric_subsets, rec);

  std::sort(report.failures.begin(), report.failures.end(),
            [](const OracleFailure& a, const OracleFailure& b) {
              return std::tie(a.check, a.input) < std::tie(b.check, b.input);
            });
  return report;
}

std::string OracleReport::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["seed"] = seed;
  j["checks_run"] = checks_run;
  j["passed"] = passed();
  j["failures"] = nlohmann::json::array();
  for (const OracleFailure& f : failures) {
    j["failures"].push_back({{"check", f.check},
                             {"input", f.input},
                             {"expected", f.expected},
                             {"actual", f.actual}});
  }
  return j.dump();
}

}  // namespace cayley::verify
