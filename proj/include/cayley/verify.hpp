#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley::verify {

/// Independent brute-force oracles. Nothing here shares code with the
/// implementation paths it checks.

/// One failed check: what was tested, on which input, what was expected and
/// what came out.
struct OracleFailure {
  std::string check;
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const OracleFailure&, const OracleFailure&) = default;
};

struct OracleReport {
  std::string group;
  std::uint64_t seed = 0;
  std::int64_t checks_run = 0;
  std::vector<OracleFailure> failures;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

/// Sampling configuration for cross_check_suite. The default seed is fixed so
/// failures reproduce.
struct SamplingBudget {
  std::uint64_t seed = 0;
  /// Random symmetric subsets per randomized check (groups of order > 8;
  /// smaller groups are swept exhaustively).
  int random_subsets = 48;
  /// Random integer weight tuples for distance-matrix spectra.
  int random_weight_tuples = 8;
  /// Random distance sets D when the profile is too long to enumerate.
  int random_distance_sets = 16;
};

/// All eigenvalues of a real symmetric matrix, ascending. Self-contained
/// cyclic Jacobi iteration, run until the off-diagonal norm drops below
/// 1e-12; shares no code with the character-sum spectrum path.
std::vector<double> numeric_eigenvalues(const std::vector<std::vector<double>>& m);

/// The full Boolean algebra generated by the cyclic subgroups: the fixed
/// point of closing them under union, intersection and complement. Exponential
/// in spirit, so capped at group order 24. Returned sorted by membership mask.
std::vector<GroupSubset> boolean_closure_oracle(const GroupSpec& g);

/// f(U_1 u ... u U_k) for f = character alpha, evaluated by inclusion and
/// exclusion over all intersections. Inputs must be (cyclic) subgroups.
std::complex<double> inclusion_exclusion_f(const GroupSpec& g,
                                           const std::vector<GroupSubset>& subgroups,
                                           const Element& alpha);

/// Runs every library invariant against the oracles for one group.
/// Deterministic under a fixed seed; failures are sorted by check name then
/// input description.
OracleReport cross_check_suite(const GroupSpec& g, const SamplingBudget& budget = {});

}  // namespace cayley::verify
