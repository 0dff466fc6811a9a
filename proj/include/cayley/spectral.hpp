#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/boolean_algebra.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Characters and exact Cayley-graph spectra of finite abelian groups.
///
/// Conventions, fixed once so every output is reproducible bit for bit:
///  - the root of unity for factor i is the principal one, exp(2*pi*I / n_i);
///  - character alpha evaluated at x is prod_i exp(2*pi*I * alpha_i * x_i / n_i);
///  - characters are indexed by alpha in the canonical element order, so the
///    spectrum entry for alpha(i) aligns with character-matrix row i.

/// Default tolerance for deciding that an eigenvalue is an integer.
inline constexpr double kIntegralityTol = 1e-6;

/// Scale factor for identity checks: residuals are compared against
/// kIdentityTolScale * n.
inline constexpr double kIdentityTolScale = 1e-9;

/// Value of character alpha at x; always a root of unity of modulus 1.
std::complex<double> character_value(const GroupSpec& g, const Element& alpha,
                                     const Element& x);

/// Character sum over S, summed in canonical element order. Empty set gives 0.
std::complex<double> character_sum(const GroupSpec& g, const Element& alpha,
                                   const GroupSubset& s);

/// The exact spectrum of Cay(G, S): one eigenvalue per character, in the
/// canonical character order.
class Spectrum {
 public:
  Spectrum(GroupSpec group, std::vector<std::complex<double>> eigenvalues);

  const GroupSpec& group() const { return group_; }
  std::int64_t size() const { return std::ssize(eigenvalues_); }

  /// Character index of entry i (canonical element order).
  Element alpha_at(std::int64_t i) const { return group_.element_at(i); }
  std::complex<double> eigenvalue(std::int64_t i) const;
  const std::vector<std::complex<double>>& eigenvalues() const { return eigenvalues_; }

  /// True iff every eigenvalue is within tol of a real integer.
  bool all_integral(double tol) const;

  /// Real parts sorted ascending; the eigenvalue multiset of the adjacency
  /// matrix when the shift set is symmetric.
  std::vector<double> sorted_real_parts() const;

  /// Schema: {"group": "n1xn2x...", "order": n,
  ///          "entries": [{"alpha": [..], "re": f, "im": f}, ...]}
  /// with floats at 17 significant digits.
  std::string to_json() const;
  static Spectrum from_json(std::string_view text);

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.group_ == b.group_ && a.eigenvalues_ == b.eigenvalues_;
  }

 private:
  GroupSpec group_;
  std::vector<std::complex<double>> eigenvalues_;
};

/// Spectrum of Cay(G, S) computed by character sums. S must be symmetric;
/// 0 in S adds a loop everywhere and shifts every eigenvalue by +1.
Spectrum spectrum(const GroupSubset& s);

/// The n-by-n matrix h[i][j] = psi_i(v_j). Satisfies H * conj(H)^T = n I.
class CharacterMatrix {
 public:
  CharacterMatrix(GroupSpec group, std::vector<std::complex<double>> row_major);

  const GroupSpec& group() const { return group_; }
  std::int64_t dim() const { return group_.order(); }
  std::complex<double> at(std::int64_t row, std::int64_t col) const;

  /// max |(H conj(H)^T)_{ij} - n delta_{ij}|, the orthogonality residual.
  double orthogonality_defect() const;

 private:
  GroupSpec group_;
  std::vector<std::complex<double>> h_;
};

/// Materializes the character matrix; refuses groups above the cap since the
/// result is a dense n-by-n complex matrix.
CharacterMatrix character_matrix(const GroupSpec& g,
                                 std::int64_t max_order = kDefaultMaxGroupOrder);

/// Both integrality verdicts for a symmetric subset: the numeric one (every
/// eigenvalue within tol of an integer) and the structural one (S is a union
/// of atoms). They must agree; a mismatch is a bug or a tolerance failure.
struct IntegralityVerdict {
  bool spectral = false;
  bool structural = false;
  bool agree() const { return spectral == structural; }
};

IntegralityVerdict integrality_verdicts(const GroupSubset& s,
                                        double tol = kIntegralityTol);

/// Numeric integrality verdict. Emits a diagnostic on stderr if it disagrees
/// with the structural criterion rather than resolving the conflict silently.
bool is_integral_spectrum(const GroupSubset& s, double tol = kIntegralityTol);

/// Inverts H chi = w: recovers the subset whose spectrum was given, rounding
/// each recovered coordinate to {0,1}. Throws InconsistentSpectrumError if a
/// coordinate lands farther than 0.1 from both.
GroupSubset recover_subset(const Spectrum& spec);

}  // namespace cayley
