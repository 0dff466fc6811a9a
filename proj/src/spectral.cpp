#include "cayley/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace cayley {

namespace {

/// Least common multiple of the moduli; every character value is an L-th root
/// of unity, so phases can be accumulated as exact integers mod L.
std::int64_t phase_denominator(const GroupSpec& g) {
  std::int64_t l = 1;
  for (std::int64_t m : g.moduli()) l = std::lcm(l, m);
  return l;
}

std::int64_t phase_numerator(const GroupSpec& g, const Element& alpha,
                             const Element& x, std::int64_t l) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    const std::int64_t m = g.moduli()[i];
    t = (t + ((alpha[i] * x[i]) % m) * (l / m)) % l;
  }
  return t;
}

std::complex<double> root_of_unity(std::int64_t num, std::int64_t den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::complex<double> character_value(const GroupSpec& g, const Element& alpha,
                                     const Element& x) {
  const Element a = g.reduce(alpha);
  const Element v = g.reduce(x);
  const std::int64_t l = phase_denominator(g);
  return root_of_unity(phase_numerator(g, a, v, l), l);
}

std::complex<double> character_sum(const GroupSpec& g, const Element& alpha,
                                   const GroupSubset& s) {
  if (!(s.group() == g)) {
    throw std::invalid_argument("subset belongs to a different group");
  }
  const Element a = g.reduce(alpha);
  const std::int64_t l = phase_denominator(g);
  std::complex<double> sum = 0.0;
  for (std::int64_t i : s.indices()) {
    sum += root_of_unity(phase_numerator(g, a, g.element_at(i), l), l);
  }
  return sum;
}

Spectrum::Spectrum(GroupSpec group, std::vector<std::complex<double>> eigenvalues)
    : group_(std::move(group)), eigenvalues_(std::move(eigenvalues)) {
  if (std::ssize(eigenvalues_) != group_.order()) {
    throw std::invalid_argument("spectrum needs one eigenvalue per group element");
  }
}

std::complex<double> Spectrum::eigenvalue(std::int64_t i) const {
  if (i < 0 || i >= size()) throw std::invalid_argument("spectrum index out of range");
  return eigenvalues_[static_cast<std::size_t>(i)];
}

bool Spectrum::all_integral(double tol) const {
  for (const std::complex<double>& ev : eigenvalues_) {
    if (std::abs(ev.imag()) > tol) return false;
    if (std::abs(ev.real() - std::round(ev.real())) > tol) return false;
  }
  return true;
}

std::vector<double> Spectrum::sorted_real_parts() const {
  std::vector<double> out;
  out.reserve(eigenvalues_.size());
  for (const auto& ev : eigenvalues_) out.push_back(ev.real());
  std::sort(out.begin(), out.end());
  return out;
}

std::string Spectrum::to_json() const {
  std::string out = "{\"group\":\"" + group_.to_string() +
                    "\",\"order\":" + std::to_string(group_.order()) +
                    ",\"entries\":[";
  for (std::int64_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    const Element alpha = alpha_at(i);
    out += "{\"alpha\":[";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(alpha[j]);
    }
    out += "],\"re\":" + format_double(eigenvalues_[static_cast<std::size_t>(i)].real()) +
           ",\"im\":" + format_double(eigenvalues_[static_cast<std::size_t>(i)].imag()) +
           "}";
  }
  out += "]}";
  return out;
}

Spectrum Spectrum::from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  GroupSpec g = GroupSpec::parse(j.at("group").get<std::string>());
  if (j.at("order").get<std::int64_t>() != g.order()) {
    throw std::invalid_argument("spectrum order field does not match the group");
  }
  const auto& entries = j.at("entries");
  if (std::ssize(entries) != g.order()) {
    throw std::invalid_argument("spectrum entry count does not match the group order");
  }
  std::vector<std::complex<double>> eigenvalues;
  eigenvalues.reserve(entries.size());
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    const Element alpha = e.at("alpha").get<Element>();
    if (g.index_of(alpha) != i || g.reduce(alpha) != alpha) {
      throw std::invalid_argument("spectrum entries are not in canonical character order");
    }
    eigenvalues.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
  }
  return Spectrum(std::move(g), std::move(eigenvalues));
}

Spectrum spectrum(const GroupSubset& s) {
  if (!s.is_symmetric()) {
    throw std::invalid_argument("spectrum requires a symmetric shift set (S = -S)");
  }
  const GroupSpec& g = s.group();
  std::vector<std::complex<double>> eigenvalues;
  eigenvalues.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) {
    eigenvalues.push_back(character_sum(g, g.element_at(i), s));
  }
  return Spectrum(g, std::move(eigenvalues));
}

CharacterMatrix::CharacterMatrix(GroupSpec group,
                                 std::vector<std::complex<double>> row_major)
    : group_(std::move(group)), h_(std::move(row_major)) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (h_.size() != n * n) {
    throw std::invalid_argument("character matrix must be n x n");
  }
}

std::complex<double> CharacterMatrix::at(std::int64_t row, std::int64_t col) const {
  const std::int64_t n = dim();
  if (row < 0 || row >= n || col < 0 || col >= n) {
    throw std::invalid_argument("character matrix index out of range");
  }
  return h_[static_cast<std::size_t>(row * n + col)];
}

double CharacterMatrix::orthogonality_defect() const {
  const std::int64_t n = dim();
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      std::complex<double> dot = 0.0;
      for (std::int64_t k = 0; k < n; ++k) {
        dot += h_[static_cast<std::size_t>(i * n + k)] *
               std::conj(h_[static_cast<std::size_t>(j * n + k)]);
      }
      if (i == j) dot -= static_cast<double>(n);
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

CharacterMatrix character_matrix(const GroupSpec& g, std::int64_t max_order) {
  const std::int64_t n = g.order();
  if (n > max_order) {
    throw ResourceError("character matrix for order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(max_order));
  }
  const std::int64_t l = phase_denominator(g);
  std::vector<std::complex<double>> h;
  h.reserve(static_cast<std::size_t>(n * n));
  for (std::int64_t i = 0; i < n; ++i) {
    const Element alpha = g.element_at(i);
    for (std::int64_t j = 0; j < n; ++j) {
      h.push_back(root_of_unity(phase_numerator(g, alpha, g.element_at(j), l), l));
    }
  }
  return CharacterMatrix(g, std::move(h));
}

IntegralityVerdict integrality_verdicts(const GroupSubset& s, double tol) {
  IntegralityVerdict v;
  v.spectral = spectrum(s).all_integral(tol);
  v.structural = in_boolean_algebra(s);
  return v;
}

bool is_integral_spectrum(const GroupSubset& s, double tol) {
  const IntegralityVerdict v = integrality_verdicts(s, tol);
  if (!v.agree()) {
    std::cerr << "cayley: integrality verdicts disagree for S=" << s.to_string()
              << " over " << s.group().to_string() << " (spectral="
              << (v.spectral ? "yes" : "no") << ", structural="
              << (v.structural ? "yes" : "no") << ", tol=" << tol << ")\n";
  }
  return v.spectral;
}

GroupSubset recover_subset(const Spectrum& spec) {
  const GroupSpec& g = spec.group();
  const std::int64_t n = g.order();
  const std::int64_t l = phase_denominator(g);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
  for (std::int64_t k = 0; k < n; ++k) {
    const Element v = g.element_at(k);
    std::complex<double> chi = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      chi += std::conj(root_of_unity(phase_numerator(g, g.element_at(i), v, l), l)) *
             spec.eigenvalue(i);
    }
    chi /= static_cast<double>(n);
    const double re = chi.real();
    const double rounded = re >= 0.5 ? 1.0 : 0.0;
    if (std::abs(re - rounded) > 0.1 || std::abs(chi.imag()) > 0.1) {
      throw InconsistentSpectrumError(
          "recovered characteristic value " + format_double(re) + "+" +
          format_double(chi.imag()) + "i at " + element_to_string(v) +
          " is not within 0.1 of {0,1}");
    }
    mask[static_cast<std::size_t>(k)] = rounded == 1.0 ? 1 : 0;
  }
  return GroupSubset::from_mask(g, std::move(mask));
}

}  // namespace cayley
