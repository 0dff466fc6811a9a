#include "cayley/cli.hpp"

#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/boolean_algebra.hpp"
#include "cayley/graph.hpp"
#include "cayley/group.hpp"
#include "cayley/spectral.hpp"
#include "cayley/verify.hpp"

namespace cayley::cli {

namespace {

struct GlobalOptions {
  std::string group;
  double tol = kIntegralityTol;
  std::string output = "table";
  std::uint64_t seed = 0;

  bool json() const { return output == "json"; }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  }
  return v;
}

/// Subsets are written either as comma-separated canonical indices ("1,5")
/// or as semicolon-separated coordinate tuples ("(1,2);(0,1)"). The empty
/// string is the empty set.
GroupSubset parse_subset(const GroupSpec& g, const std::string& text) {
  if (text.empty()) return GroupSubset::empty(g);
  std::vector<std::int64_t> indices;
  if (text.find('(') != std::string::npos) {
    for (const std::string& tok : split(text, ';')) {
      if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') {
        throw std::invalid_argument("bad element tuple '" + tok + "'");
      }
      Element x;
      for (const std::string& coord : split(tok.substr(1, tok.size() - 2), ',')) {
        x.push_back(parse_int(coord, "coordinate"));
      }
      indices.push_back(g.index_of(x));
    }
  } else {
    for (const std::string& tok : split(text, ',')) {
      indices.push_back(parse_int(tok, "element index"));
    }
  }
  return GroupSubset::of_indices(g, indices);
}

DistanceSet parse_distance_set(const std::string& text) {
  DistanceSet d;
  if (text.empty()) return d;
  for (const std::string& tok : split(text, ',')) {
    d.insert(Distance::parse(tok));
  }
  return d;
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> w;
  if (text.empty()) return w;
  for (const std::string& tok : split(text, ',')) {
    w.push_back(parse_int(tok, "weight"));
  }
  return w;
}

nlohmann::json subset_to_json(const GroupSubset& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Element& x : s.elements()) arr.push_back(x);
  return arr;
}

std::string format_eigenvalue(const std::complex<double>& ev) {
  char buf[80];
  if (std::abs(ev.imag()) < 1e-12) {
    std::snprintf(buf, sizeof(buf), "%.12g", ev.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", ev.real(), ev.imag());
  }
  return buf;
}

void print_spectrum_table(std::ostream& out, const Spectrum& spec, double tol) {
  for (std::int64_t i = 0; i < spec.size(); ++i) {
    out << "alpha=" << element_to_string(spec.alpha_at(i))
        << "  eigenvalue=" << format_eigenvalue(spec.eigenvalue(i)) << "\n";
  }
  out << "integral: " << (spec.all_integral(tol) ? "yes" : "no") << "\n";
}

/// Compares the character-sum spectrum with the Jacobi eigensolver on the
/// materialized matrix. Returns true when the multisets agree within tol.
bool numeric_check(const Spectrum& spec,
                   const std::vector<std::vector<std::int64_t>>& matrix, double tol) {
  std::vector<std::vector<double>> m(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    m[i].assign(matrix[i].begin(), matrix[i].end());
  }
  const std::vector<double> numeric = verify::numeric_eigenvalues(m);
  const std::vector<double> exact = spec.sorted_real_parts();
  if (numeric.size() != exact.size()) return false;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    if (std::abs(numeric[i] - exact[i]) > tol) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> adjacency_int64(const CayleyGraph& g) {
  const auto a = g.adjacency_matrix();
  std::vector<std::vector<std::int64_t>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i].assign(a[i].begin(), a[i].end());
  return out;
}

int cmd_atoms(const GlobalOptions& opt, const std::string& group_text,
              std::ostream& out) {
  const GroupSpec g = GroupSpec::parse(group_text);
  const AtomPartition partition(g);
  if (opt.json()) {
    nlohmann::json j;
    j["group"] = g.to_string();
    j["order"] = g.order();
    j["atoms"] = nlohmann::json::array();
    for (const GroupSubset& atom : partition.atoms()) {
      const Element rep = g.element_at(atom.indices().front());
      j["atoms"].push_back({{"rep", rep},
                            {"order", g.order_of(rep)},
                            {"size", atom.size()},
                            {"elements", subset_to_json(atom)}});
    }
    out << j.dump() << "\n";
  } else {
    out << "group " << g.to_string() << "  order " << g.order() << "  atoms "
        << partition.atoms().size() << "\n";
    std::size_t idx = 0;
    for (const GroupSubset& atom : partition.atoms()) {
      const Element rep = g.element_at(atom.indices().front());
      out << "atom " << idx++ << ": rep " << element_to_string(rep) << "  order "
          << g.order_of(rep) << "  size " << atom.size() << "  "
          << atom.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_spectrum(const GlobalOptions& opt, const std::string& group_text,
                 const std::string& subset_text, const std::string& dm_weights,
                 bool check, std::ostream& out, std::ostream& err) {
  const GroupSpec g = GroupSpec::parse(group_text);
  const GroupSubset s = parse_subset(g, subset_text);
  if (!s.is_symmetric()) {
    throw std::invalid_argument("subset must be symmetric (S = -S)");
  }

  Spectrum spec = spectrum(s);
  std::vector<std::vector<std::int64_t>> matrix;
  if (!dm_weights.empty()) {
    const CayleyGraph graph(s);
    DistanceMatrixSpec dm{parse_weights(dm_weights)};
    spec = dm_spectrum(graph, dm);
    if (check) matrix = generalized_distance_matrix(graph, dm);
  } else if (check) {
    matrix = adjacency_int64(CayleyGraph(s));
  }

  if (opt.json()) {
    out << spec.to_json() << "\n";
  } else {
    print_spectrum_table(out, spec, opt.tol);
  }

  if (check && !numeric_check(spec, matrix, opt.tol)) {
    err << "check failed: character-sum spectrum does not match the numeric "
           "eigensolver within "
        << opt.tol << "\n";
    return kExitPropertyViolation;
  }
  return kExitOk;
}

int cmd_is_integral(const GlobalOptions& opt, const std::string& group_text,
                    const std::string& subset_text, std::ostream& out,
                    std::ostream& err) {
  const GroupSpec g = GroupSpec::parse(group_text);
  const GroupSubset s = parse_subset(g, subset_text);
  if (!s.is_symmetric()) {
    throw std::invalid_argument("subset must be symmetric (S = -S)");
  }
  const IntegralityVerdict v = integrality_verdicts(s, opt.tol);
  if (opt.json()) {
    nlohmann::json j;
    j["group"] = g.to_string();
    j["subset"] = subset_to_json(s);
    j["structural"] = v.structural;
    j["spectral"] = v.spectral;
    j["agree"] = v.agree();
    out << j.dump() << "\n";
  } else {
    out << "structural (union of atoms): " << (v.structural ? "yes" : "no") << "\n";
    out << "spectral (eigenvalues integral): " << (v.spectral ? "yes" : "no") << "\n";
  }
  if (!v.agree()) {
    err << "integrality verdicts disagree; this is a bug or a tolerance failure\n";
    return kExitPropertyViolation;
  }
  return kExitOk;
}

int cmd_distance_power(const GlobalOptions& opt, const std::string& group_text,
                       const std::string& subset_text, const std::string& d_text,
                       std::ostream& out) {
  const GroupSpec g = GroupSpec::parse(group_text);
  const GroupSubset s = parse_subset(g, subset_text);
  const CayleyGraph graph(s);
  const DistanceSet d = parse_distance_set(d_text);
  const GroupSubset shift = distance_power_shift(graph, d);
  const bool in_b = in_boolean_algebra(shift);
  const bool gcd = is_gcd_set(shift);
  if (opt.json()) {
    nlohmann::json j;
    j["group"] = g.to_string();
    j["subset"] = subset_to_json(s);
    j["D"] = nlohmann::json::array();
    for (Distance dd : d) j["D"].push_back(dd.to_string());
    j["shift"] = subset_to_json(shift);
    j["in_boolean_algebra"] = in_b;
    j["is_gcd_set"] = gcd;
    out << j.dump() << "\n";
  } else {
    out << "S^(D) = " << shift.to_string() << "\n";
    out << "in B(Gamma): " << (in_b ? "yes" : "no") << "\n";
    out << "gcd-set: " << (gcd ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_enumerate_integral(const GlobalOptions& opt, const std::string& group_text,
                           bool gcd_only, std::ostream& out) {
  const GroupSpec g = GroupSpec::parse(group_text);
  std::vector<GroupSubset> parts;
  if (gcd_only) {
    for (const DivisorTuple& t : divisor_tuples(g)) {
      parts.push_back(elementary_gcd_set(g, t));
    }
  } else {
    parts = AtomPartition(g).atoms();
  }
  if (parts.size() > 20) {
    throw ResourceError("refusing to stream 2^" + std::to_string(parts.size()) +
                        " subsets");
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << parts.size()); ++bits) {
    GroupSubset s = GroupSubset::empty(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (bits & (std::uint64_t{1} << i)) s = s.united(parts[i]);
    }
    const Spectrum spec = spectrum(s);
    if (opt.json()) {
      out << "{\"subset\":" << subset_to_json(s).dump()
          << ",\"spectrum\":" << spec.to_json() << "}\n";
    } else {
      out << "S=" << s.to_string() << "  eigenvalues=[";
      for (std::int64_t i = 0; i < spec.size(); ++i) {
        if (i) out << ',';
        out << format_eigenvalue(spec.eigenvalue(i));
      }
      out << "]\n";
    }
  }
  return kExitOk;
}

int cmd_gcd_sets(const GlobalOptions& opt, const std::string& group_text,
                 std::ostream& out) {
  const GroupSpec g = GroupSpec::parse(group_text);
  const auto tuples = divisor_tuples(g);
  if (opt.json()) {
    nlohmann::json j;
    j["group"] = g.to_string();
    j["elementary"] = nlohmann::json::array();
    for (const DivisorTuple& t : tuples) {
      const GroupSubset s = elementary_gcd_set(g, t);
      j["elementary"].push_back(
          {{"d", t.d}, {"size", s.size()}, {"elements", subset_to_json(s)}});
    }
    out << j.dump() << "\n";
  } else {
    out << "group " << g.to_string() << "  elementary gcd-sets " << tuples.size()
        << "\n";
    for (const DivisorTuple& t : tuples) {
      const GroupSubset s = elementary_gcd_set(g, t);
      out << "d=" << t.to_string() << "  size " << s.size() << "  " << s.to_string()
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opt, const std::string& group_text, int budget,
               std::ostream& out) {
  const GroupSpec g = GroupSpec::parse(group_text);
  verify::SamplingBudget sampling;
  sampling.seed = opt.seed;
  if (budget > 0) sampling.random_subsets = budget;
  const verify::OracleReport report = verify::cross_check_suite(g, sampling);
  if (opt.json()) {
    out << report.to_json() << "\n";
  } else {
    out << "group " << report.group << "  seed " << report.seed << "  checks "
        << report.checks_run << "  failures " << report.failures.size() << "\n";
    for (const verify::OracleFailure& f : report.failures) {
      out << "FAIL " << f.check << "  " << f.input;
      if (!f.expected.empty() || !f.actual.empty()) {
        out << "  expected " << f.expected << "  actual " << f.actual;
      }
      out << "\n";
    }
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kExitOk : kExitPropertyViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral Cayley graphs over finite abelian groups"};
  app.name("cayley");
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--group", opt.group, "group spec, e.g. 6 or 2x4x3");
  app.add_option("--tol", opt.tol, "integrality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", opt.seed, "seed for sampled checks");

  // Positional group arguments fall back to --group when omitted.
  std::string pos_group, subset_text, d_text, k_text, dm_weights;
  bool check_flag = false, gcd_only = false;
  int budget = 0;

  CLI::App* atoms = app.add_subcommand("atoms", "list the atom partition");
  atoms->add_option("group", pos_group, "group spec");

  CLI::App* spect = app.add_subcommand("spectrum", "exact spectrum of Cay(G,S)");
  spect->add_option("group", pos_group, "group spec");
  spect->add_option("subset", subset_text, "shift set ('' is empty)");
  spect->add_option("--dm", dm_weights, "weights for the distance-matrix spectrum");
  spect->add_flag("--check", check_flag, "cross-check against the numeric eigensolver");

  CLI::App* integral = app.add_subcommand("is-integral", "decide integrality both ways");
  integral->add_option("group", pos_group, "group spec");
  integral->add_option("subset", subset_text, "shift set");

  CLI::App* dpower = app.add_subcommand("distance-power", "shift set of G^D");
  dpower->add_option("group", pos_group, "group spec");
  dpower->add_option("subset", subset_text, "shift set");
  dpower->add_option("D", d_text, "distances, e.g. 1,2 or inf");

  CLI::App* dmspec = app.add_subcommand("dm-spectrum", "spectrum of DM(k,G)");
  dmspec->add_option("group", pos_group, "group spec");
  dmspec->add_option("subset", subset_text, "shift set");
  dmspec->add_option("k", k_text, "weights aligned with the distance profile")
      ->required();
  dmspec->add_flag("--check", check_flag, "cross-check against the numeric eigensolver");

  CLI::App* enumerate =
      app.add_subcommand("enumerate-integral", "stream all symmetric S in B(Gamma)");
  enumerate->add_option("group", pos_group, "group spec");
  enumerate->add_flag("--gcd-only", gcd_only, "enumerate gcd-sets instead");

  CLI::App* gcds = app.add_subcommand("gcd-sets", "list elementary gcd-sets");
  gcds->add_option("group", pos_group, "group spec");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suite");
  verify_cmd->add_option("group", pos_group, "group spec");
  verify_cmd->add_option("--budget", budget, "random subsets per sampled check");

  std::vector<const char*> argv;
  argv.push_back("cayley");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string group_text = !pos_group.empty() ? pos_group : opt.group;

  try {
    if (atoms->parsed()) return cmd_atoms(opt, group_text, out);
    if (spect->parsed()) {
      return cmd_spectrum(opt, group_text, subset_text, dm_weights, check_flag, out, err);
    }
    if (integral->parsed()) return cmd_is_integral(opt, group_text, subset_text, out, err);
    if (dpower->parsed()) {
      return cmd_distance_power(opt, group_text, subset_text, d_text, out);
    }
    if (dmspec->parsed()) {
      return cmd_spectrum(opt, group_text, subset_text, k_text, check_flag, out, err);
    }
    if (enumerate->parsed()) return cmd_enumerate_integral(opt, group_text, gcd_only, out);
    if (gcds->parsed()) return cmd_gcd_sets(opt, group_text, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, group_text, budget, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cayley::cli
