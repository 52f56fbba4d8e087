#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "detarr/arrangement.hpp"
#include "detarr/derivation.hpp"
#include "detarr/graph.hpp"
#include "detarr/topology.hpp"

namespace detarr::cli {
namespace {

using nlohmann::json;

inline constexpr int kAutoSymbolicMax = 4;
inline constexpr int kSymbolicMax = 7;
inline constexpr int kRandomizedMax = 10;

struct RunConfig {
  std::string command;
  std::vector<std::string> graph_source;
  std::string derivation_file;
  bool json = false;
  std::uint64_t seed = 0;
  std::string mode = "auto";
  int threads = 1;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph resolve_graph(const std::vector<std::string>& source) {
  if (source.size() == 2 && source[0] == "complete") {
    return parse_graph("complete " + source[1]);
  }
  if (source.size() == 1) return load_graph_file(source[0]);
  throw InputError("expected a graph file or 'complete <n>'");
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) + " edges";
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (auto [i, j] : g.edges()) out.push_back({i, j});
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

int cmd_chordal(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.graph_source);
  const ChordalityVerdict verdict = is_chordal(g);
  json report = {{"command", "chordal"}, {"n", g.vertex_count()}, {"edges", edges_json(g)},
                 {"chordal", verdict.chordal()}};
  std::ostringstream text;
  text << "graph: " << describe(g) << "\n";
  if (verdict.chordal()) {
    report["elimination_order"] = verdict.order->order;
    report["pdim_lower_bound"] = nullptr;
    text << "chordal: yes\n"
         << "elimination order: " << join(verdict.order->order) << "\n"
         << "pdim lower bound: none (no chordless cycle; this does not certify freeness)\n";
  } else {
    report["witness"] = verdict.witness;
    text << "chordal: no\n"
         << "chordless cycle: " << format_cycle(verdict.witness) << "\n"
         << "arrangement: not free\n";
    if (g.vertex_count() <= kDefaultCycleSearchLimit) {
      const int k = *longest_chordless_cycle(g);
      report["longest_chordless_cycle"] = k;
      report["pdim_lower_bound"] = k - 3;
      report["pdim_bound_source"] = "longest_chordless_cycle";
      text << "longest chordless cycle: " << k << "\n"
           << "pdim lower bound: >= " << k - 3 << "\n";
    } else {
      const int k = static_cast<int>(verdict.witness.size());
      report["longest_chordless_cycle"] = nullptr;
      report["pdim_lower_bound"] = k - 3;
      report["pdim_bound_source"] = "witness";
      text << "longest chordless cycle: not searched (n > " << kDefaultCycleSearchLimit << ")\n"
           << "pdim lower bound: >= " << k - 3 << " (from the witness cycle)\n";
    }
  }
  if (cfg.json) {
    emit(out, report);
  } else {
    out << text.str();
  }
  return verdict.chordal() ? kExitOk : kExitNegative;
}

json saito_json(const SaitoReport& r) {
  json j = {
      {"mode", r.mode == SaitoMode::Symbolic ? "symbolic" : "randomized"},
      {"f_degree", r.f_degree},
      {"determinant_degree", r.determinant_degree ? json(*r.determinant_degree) : json(nullptr)},
      {"basis", r.basis},
  };
  if (r.basis) {
    j["c_num"] = integer_json(r.c_num);
    j["c_den"] = integer_json(r.c_den);
    j["abs_c"] = r.c_den == 1 ? integer_json(r.abs_c_num()) : json(r.abs_c_num().get_str() + "/" + r.c_den.get_str());
  } else {
    j["reason"] = r.reason;
  }
  if (r.mode == SaitoMode::Randomized) {
    j["seed"] = r.seed;
    j["point_count"] = r.sample_points.size();
    json pts = json::array();
    for (const auto& p : r.sample_points) {
      json row = json::array();
      for (const auto& v : p) row.push_back(integer_json(v));
      pts.push_back(row);
    }
    j["points"] = pts;
    j["failure_bound"] = r.failure_bound;
  }
  return j;
}

int cmd_saito(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = resolve_graph(cfg.graph_source);
  const int n = g.vertex_count();
  if (!g.is_complete() || n < 3) {
    err << "saito: the explicit logarithmic basis is only available for complete graphs K_n with n >= 3; "
        << "got " << describe(g) << "\n";
    return kExitOutOfScope;
  }
  SaitoMode mode;
  std::string mode_note;
  if (cfg.mode == "auto") {
    mode = n <= kAutoSymbolicMax ? SaitoMode::Symbolic : SaitoMode::Randomized;
    mode_note = " (auto)";
  } else {
    mode = cfg.mode == "symbolic" ? SaitoMode::Symbolic : SaitoMode::Randomized;
  }
  const int limit = mode == SaitoMode::Symbolic ? kSymbolicMax : kRandomizedMax;
  if (n > limit) {
    err << "saito: n=" << n << " exceeds the " << (mode == SaitoMode::Symbolic ? "symbolic" : "randomized")
        << " limit of " << limit << "\n";
    return kExitOutOfScope;
  }

  const Arrangement arrangement(g);
  const auto basis = std_basis(n);
  const auto names = std_basis_names(n);
  std::vector<std::string> failing;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto edges = is_logarithmic_componentwise(basis[k], arrangement);
    if (!std::all_of(edges.begin(), edges.end(), [](const EdgeMembership& e) { return e.passes(); })) {
      failing.push_back(names[k]);
    }
  }

  RandomizedOptions options;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  const SaitoReport report = saito_check(basis, arrangement.defining_poly(), mode, options);
  const bool free = failing.empty() && report.basis;

  if (cfg.json) {
    json j = {{"command", "saito"},
              {"n", n},
              {"derivations", names},
              {"logarithmic", failing.empty()},
              {"not_logarithmic", failing},
              {"saito", saito_json(report)},
              {"free", free}};
    emit(out, j);
  } else {
    out << "arrangement: K_" << n << " (" << g.edge_count() << " hypersurfaces, deg f = " << report.f_degree
        << ")\n";
    out << "derivations: " << basis.size() << " (";
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? " " : "") << names[k];
    out << ")\n";
    if (failing.empty()) {
      out << "logarithmic: all derivations preserve every minor ideal\n";
    } else {
      out << "logarithmic: FAILED for";
      for (const auto& nm : failing) out << " " << nm;
      out << "\n";
    }
    if (report.mode == SaitoMode::Symbolic) {
      out << "method: symbolic" << mode_note << "\n";
    } else {
      out << "method: randomized" << mode_note << ", seed " << report.seed << ", " << report.sample_points.size()
          << " points in [-1000000, 1000000], false-positive bound " << std::scientific << std::setprecision(3)
          << report.failure_bound << std::defaultfloat << "\n";
    }
    if (report.determinant_degree) out << "determinant degree: " << *report.determinant_degree << "\n";
    if (report.basis) {
      out << "verdict: basis, |c| = " << report.abs_c_num();
      if (report.c_den != 1) out << "/" << report.c_den;
      out << "\n";
    } else {
      out << "verdict: fails (" << report.reason << ")\n";
    }
    out << "free: " << (free ? "yes" : "not established") << "\n";
    out << "time: " << std::fixed << std::setprecision(3) << report.seconds << " s\n" << std::defaultfloat;
  }
  return free ? kExitOk : kExitNegative;
}

int cmd_poincare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = resolve_graph(cfg.graph_source);
  const ChordalityVerdict verdict = is_chordal(g);
  if (!verdict.chordal()) {
    if (cfg.json) {
      emit(out, {{"command", "poincare"}, {"chordal", false}, {"witness", verdict.witness}});
    }
    err << "poincare: graph is not chordal (chordless cycle " << format_cycle(verdict.witness)
        << "); the fibration does not apply\n";
    return kExitNegative;
  }
  const FactoredUniPoly p = poincare_chordal(g);
  const HomotopyReport homotopy = homotopy_report(g);
  const int linear = p.linear_factor_count();
  const int by_vertices = 2 * g.vertex_count() - 3;
  const int by_edges = 2 * static_cast<int>(g.edge_count()) - 3;
  if (cfg.json) {
    json j = poincare_json(p);
    j["command"] = "poincare";
    j["chordal"] = true;
    j["factored_text"] = p.to_string();
    j["linear_terms_equal_2v_minus_3"] = linear == by_vertices;
    j["linear_terms_equal_2e_minus_3"] = linear == by_edges;
    j["homotopy"] = {{"pi1", homotopy.pi1}, {"pi2", homotopy.pi2}, {"pi_i_for_i_ge_3", homotopy.pi_higher}};
    emit(out, j);
  } else {
    const auto b = betti(p);
    out << "graph: " << describe(g) << "\n"
        << "poincare: " << p.to_string() << "\n"
        << "expanded: " << p.expand().to_string() << "\n"
        << "betti:";
    for (const auto& v : b) out << " " << v;
    out << "\n"
        << "linear factors: " << linear << " (2*vertices-3 = " << by_vertices << (linear == by_vertices ? ", equal" : "")
        << "; 2*edges-3 = " << by_edges << (linear == by_edges ? ", equal" : "") << ")\n"
        << "cubic factor: " << (p.has_cubic_factor() ? "yes" : "no") << "\n"
        << "pi_1: " << homotopy.pi1 << "\n"
        << "pi_2: " << homotopy.pi2 << "\n"
        << "pi_i: " << homotopy.pi_higher << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.graph_source);
  if (g.edge_count() == 0) throw InputError("verify: the graph has no edges");
  std::ifstream in(cfg.derivation_file);
  if (!in) throw InputError("cannot open derivation file '" + cfg.derivation_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto derivations = parse_derivations(buf.str(), g.vertex_count());
  if (derivations.empty()) throw InputError("derivation file contains no derivations");

  const Arrangement arrangement(g);
  bool all_pass = true;
  json report = json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < derivations.size(); ++k) {
    const auto edges = is_logarithmic_componentwise(derivations[k], arrangement);
    json per_edge = json::array();
    text << "derivation " << k + 1 << ": " << derivations[k].to_string() << "\n";
    bool pass = true;
    for (const auto& e : edges) {
      pass = pass && e.passes();
      per_edge.push_back({{"edge", {e.edge.first, e.edge.second}},
                          {"pass", e.passes()},
                          {"quotient", e.passes() ? json(e.quotient->to_string()) : json(nullptr)}});
      text << "  edge " << e.edge.first << "-" << e.edge.second << ": "
           << (e.passes() ? "pass, quotient " + e.quotient->to_string() : std::string("fail")) << "\n";
    }
    all_pass = all_pass && pass;
    report.push_back({{"derivation", derivations[k].to_string()}, {"logarithmic", pass}, {"edges", per_edge}});
  }
  if (cfg.json) {
    emit(out, {{"command", "verify"}, {"n", g.vertex_count()}, {"all_logarithmic", all_pass}, {"results", report}});
  } else {
    out << text.str() << "all logarithmic: " << (all_pass ? "yes" : "no") << "\n";
  }
  return all_pass ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& env_seed) {
  CLI::App app{"Determinantal arrangements of generic 2 x n matrices", "detarr"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--seed", seed, "Seed for randomized checks (default: $DETARR_SEED, else 0)");
  app.add_option("--mode", cfg.mode, "Saito determinant mode")
      ->check(CLI::IsMember({"symbolic", "randomized", "auto"}));
  app.add_option("--threads", cfg.threads, "Worker threads for randomized evaluation")->check(CLI::Range(1, 256));

  auto* chordal = app.add_subcommand("chordal", "Chordality verdict and projective dimension bound");
  chordal->add_option("graph", cfg.graph_source, "Graph file or 'complete <n>'")->required();
  auto* saito = app.add_subcommand("saito", "Verify the explicit basis of K_n by Saito's criterion");
  saito->add_option("graph", cfg.graph_source, "Graph file or 'complete <n>'")->required();
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement of a chordal arrangement");
  poincare->add_option("graph", cfg.graph_source, "Graph file or 'complete <n>'")->required();
  auto* verify = app.add_subcommand("verify", "Check derivations against every minor of a graph");
  verify->add_option("derivations", cfg.derivation_file, "Derivation file, one per line")->required();
  verify->add_option("graph", cfg.graph_source, "Graph file or 'complete <n>'")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  if (seed) {
    cfg.seed = *seed;
  } else if (!env_seed.empty()) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env_seed, &used);
      if (used != env_seed.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "detarr: DETARR_SEED must be an unsigned integer, got '" << env_seed << "'\n";
      return kExitInputError;
    }
  }

  try {
    if (chordal->parsed()) return cmd_chordal(cfg, out);
    if (saito->parsed()) return cmd_saito(cfg, out, err);
    if (poincare->parsed()) return cmd_poincare(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const GraphFormatError& e) {
    err << "detarr: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "detarr: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "detarr: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace detarr::cli
