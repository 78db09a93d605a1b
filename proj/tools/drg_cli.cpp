// drg: command-line front end.
//
//   drg check "<array>" [--assume quadrangle|quadrangle-free] [--json]
//   drg derive "<array>" [--spectrum] [--pnumbers] [--json]
//   drg enumerate --diameter D --max-k K [--min-k K] [--filter F] [--assume A]
//                 [--rules R0,R3,...] [--budget N] [--json] [--progress]
//   drg graph verify <name|path> [--cross-check] [--json]
//   drg catalog list
//
// Reports go to stdout, diagnostics to stderr.

#include "drg.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

drg::Assumption parse_assumption(const std::string& s) {
  if (s.empty() || s == "none") return drg::Assumption::None;
  if (s == "quadrangle") return drg::Assumption::ContainsQuadrangle;
  if (s == "quadrangle-free") return drg::Assumption::QuadrangleFree;
  throw UsageError("--assume must be 'quadrangle' or 'quadrangle-free', got '" + s + "'");
}

std::vector<std::string> split_rules(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (id.empty()) continue;
    if (!drg::is_rule_id(id)) throw UsageError("unknown rule id '" + id + "'");
    out.push_back(id);
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string join(const std::vector<drg::Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + drg::to_string(xs[i]);
  return out;
}

// --- check ---------------------------------------------------------------

int run_check(const std::string& text, const std::string& assume, bool json) {
  const auto arr = drg::parse_array(text);
  const auto report = drg::evaluate(arr, parse_assumption(assume));
  if (json) std::cout << drg::to_json(report).dump(2) << "\n";
  else std::cout << drg::to_text(report);
  switch (report.overall) {
    case drg::Overall::FeasibleSoFar: return kExitOk;
    case drg::Overall::Infeasible: return kExitInfeasible;
    case drg::Overall::Undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

// --- derive --------------------------------------------------------------

std::string describe(const drg::AlgebraicReal& x) {
  if (x.is_rational()) return drg::to_string(x.value());
  std::ostringstream out;
  out.precision(12);
  out << "~" << x.approx() << " in (" << drg::to_string(x.lo()) << ", " << drg::to_string(x.hi()) << ")";
  return out.str();
}

std::string describe(const drg::Multiplicity& m) {
  std::string out = m.exact ? drg::to_string(*m.exact)
                            : "in [" + drg::to_string(m.lo) + ", " + drg::to_string(m.hi) + "]";
  return out + " (integral: " + drg::to_string(m.integral) + ")";
}

int run_derive(const std::string& text, bool spectrum, bool pnumbers, bool json) {
  const auto arr = drg::parse_array(text);
  const auto d = drg::derive(arr, {.p_table = pnumbers});
  std::optional<drg::Spectrum> spec;
  if (spectrum) spec = drg::full_spectrum(arr);

  if (json) {
    auto j = drg::to_json(arr, d);
    if (spec) j["spectrum"] = drg::to_json(*spec);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  const int D = arr.diameter();
  std::cout << "array: " << drg::render_array(arr) << "\n";
  std::cout << "D: " << D << "\n";
  std::cout << "a: " << join(d.a) << "\n";
  std::cout << "k: " << join(d.kdist) << "\n";
  std::cout << "n: " << drg::to_string(d.n) << "\n";
  std::cout << "bipartite: " << (d.bipartite ? "true" : "false") << "\n";
  std::cout << "antipodal2: " << (d.antipodal2 ? "true" : "false") << "\n";
  if (spec) {
    std::cout << "spectrum (n = " << drg::to_string(spec->n) << "):\n";
    for (std::size_t i = 0; i < spec->thetas.size(); ++i)
      std::cout << "  theta_" << i << " = " << describe(spec->thetas[i]) << ", multiplicity " << describe(spec->mults[i])
                << "\n";
  }
  if (pnumbers) {
    std::cout << "p (row j, column h, one block per i):\n";
    for (int i = 0; i <= D; ++i) {
      std::cout << "  i=" << i << "\n";
      for (const auto& row : d.p[static_cast<std::size_t>(i)]) std::cout << "    " << join(row) << "\n";
    }
  }
  return kExitOk;
}

// --- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  int diameter = 0;
  std::int64_t k_max = 0;
  std::int64_t k_min = 3;
  std::string filter;
  std::string assume;
  std::string rules;
  std::uint64_t budget = drg::kDefaultNodeBudget;
  bool json = false;
  bool progress = false;
};

int run_enumerate(const EnumerateArgs& a) {
  drg::SearchSpec spec;
  spec.diameter = a.diameter;
  spec.k_min = a.k_min;
  spec.k_max = a.k_max;
  spec.filter = a.filter;
  spec.assumption = parse_assumption(a.assume);
  spec.rules = split_rules(a.rules);
  spec.node_budget = a.budget;

  drg::ProgressFn progress;
  if (a.progress)
    progress = [](std::uint64_t nodes, const drg::ArrayState& s) {
      std::cerr << "progress: " << nodes << " nodes, k=" << s.k << "\n";
    };
  drg::SearchResult res;
  try {
    res = drg::enumerate(spec, progress);
  } catch (const drg::SearchError& e) {
    throw UsageError(e.what());
  } catch (const drg::FilterError& e) {
    throw UsageError(e.what());
  }

  if (a.json) {
    std::cout << drg::to_json(res).dump(2) << "\n";
  } else {
    std::cout << "diameter " << spec.diameter << ", k " << spec.k_min << ".." << spec.k_max;
    if (!spec.filter.empty()) std::cout << ", filter " << spec.filter;
    std::cout << "\n";
    std::cout << "nodes: " << res.nodes << ", complete arrays judged: " << res.complete_arrays << "\n";
    std::cout << "pruned:";
    for (const auto& [rule, count] : res.pruned) std::cout << " " << rule << "=" << count;
    std::cout << "\n";
    std::cout << "survivors: " << res.survivors.size() << "\n";
    for (const auto& s : res.survivors) {
      std::cout << "  " << drg::render_array(s.array) << "  " << drg::to_string(s.report.overall);
      if (s.exception) std::cout << "  [" << *s.exception << "]";
      std::cout << "\n";
    }
    if (!res.complete) std::cout << "search incomplete: node budget exhausted\n";
  }
  std::cerr << "wall time: " << res.wall_seconds << " s\n";
  if (!res.complete) {
    std::cerr << "warning: node budget of " << spec.node_budget << " exhausted; result is partial\n";
    return kExitUndecided;
  }
  return kExitOk;
}

// --- graph ---------------------------------------------------------------

std::string data_dir() {
  if (const char* env = std::getenv("DRG_DATA_DIR"); env && *env) return env;
#ifdef DRG_DATA_DIR
  return DRG_DATA_DIR;
#else
  return "data";
#endif
}

std::optional<int> suffix_int(const std::string& s, const std::string& prefix, const std::string& suffix = "") {
  if (s.size() <= prefix.size() + suffix.size() || s.rfind(prefix, 0) != 0) return std::nullopt;
  if (s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) return std::nullopt;
  const std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
  if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stoi(digits);
}

/// Builtin graphs: <D>-cube, crown-<k>, hadamard-<2^m>, icosahedron,
/// path-<n>, K<n>, and the bundled sporadic graphs.
std::optional<drg::Graph> builtin_graph(const std::string& name) {
  if (auto D = suffix_int(name, "", "-cube")) return drg::build_cube(*D);
  if (auto k = suffix_int(name, "crown-")) return drg::build_crown(*k);
  if (auto order = suffix_int(name, "hadamard-")) {
    int m = 0;
    while ((1 << m) < *order) ++m;
    if ((1 << m) != *order) throw UsageError("only Sylvester Hadamard graphs (order a power of two) are built in");
    return drg::build_hadamard(m);
  }
  if (name == "icosahedron") return drg::build_icosahedron();
  if (auto n = suffix_int(name, "path-")) return drg::build_path(*n);
  if (auto n = suffix_int(name, "K")) return drg::build_complete(*n);
  for (auto s : drg::kSporadicNames)
    if (name == s) return drg::load_graph(data_dir() + "/" + std::string(s) + ".drg");
  return std::nullopt;
}

drg::Graph resolve_graph(const std::string& target) {
  std::optional<drg::Graph> g;
  try {
    g = builtin_graph(target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g) {
    if (std::filesystem::exists(target))
      std::cerr << "warning: '" << target << "' is a builtin graph name and also a file; using the builtin\n";
    return *g;
  }
  if (!std::filesystem::exists(target)) throw UsageError("'" + target + "' is neither a builtin graph nor a file");
  return drg::load_graph(target);
}

int run_graph_verify(const std::string& target, bool cross, bool json) {
  const drg::Graph g = resolve_graph(target);
  const auto verdict = drg::verify_drg(g);
  nlohmann::json j;
  j["graph"] = g.name;
  j["n"] = g.n();
  if (const auto* bad = std::get_if<drg::NotDrg>(&verdict)) {
    j["distance_regular"] = false;
    j["witness"] = {{"x", bad->x}, {"y", bad->y}, {"i", bad->i}, {"reason", bad->reason}};
    if (json) std::cout << j.dump(2) << "\n";
    else
      std::cout << "graph: " << g.name << " (n=" << g.n() << ")\nnot distance-regular: " << bad->reason << " (x=" << bad->x
                << ", y=" << bad->y << ", i=" << bad->i << ")\n";
    return kExitInfeasible;
  }
  const auto& cert = std::get<drg::DrgCertificate>(verdict);
  j["distance_regular"] = true;
  j["array"] = drg::render_array(cert.array);
  j["layer_sizes"] = cert.layer_sizes;
  j["bipartite"] = cert.bipartite;
  j["antipodal2"] = cert.antipodal2;
  j["has_induced_quadrangle"] = cert.has_induced_quadrangle;
  const auto match = drg::match_exception(cert.array);
  j["catalog_match"] = match ? nlohmann::json(*match) : nlohmann::json(nullptr);
  bool ok = true;
  drg::CrossCheckReport rep;
  if (cross) {
    rep = drg::cross_check(g, cert);
    ok = rep.ok();
    auto& checks = j["cross_check"] = nlohmann::json::array();
    for (const auto& l : rep.lines) checks.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: " << g.name << " (n=" << g.n() << ")\n";
    std::cout << "array: " << drg::render_array(cert.array) << "\n";
    std::cout << "layer sizes: " << join(cert.layer_sizes) << "\n";
    std::cout << "bipartite: " << (cert.bipartite ? "true" : "false") << "\n";
    std::cout << "antipodal2: " << (cert.antipodal2 ? "true" : "false") << "\n";
    std::cout << "has induced quadrangle: " << (cert.has_induced_quadrangle ? "true" : "false") << "\n";
    std::cout << "catalog match: " << match.value_or("none") << "\n";
    for (const auto& l : rep.lines) std::cout << (l.ok ? "ok   " : "FAIL ") << l.name << ": " << l.detail << "\n";
  }
  return ok ? kExitOk : kExitInfeasible;
}

// --- catalog -------------------------------------------------------------

int run_catalog_list() {
  for (const auto& e : drg::catalog()) {
    const auto d = drg::derive(e.array, {.p_table = false});
    std::cout << e.name << "\t" << e.array.diameter() << "\t" << drg::to_string(d.n) << "\t" << drg::render_array(e.array)
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility checks, parameters and searches for distance-regular graph intersection arrays"};
  app.require_subcommand(1);

  std::string array_text, assume;
  bool json = false, spectrum = false, pnumbers = false, cross = false;

  auto* check = app.add_subcommand("check", "Evaluate every feasibility rule on an array");
  check->add_option("array", array_text, "Intersection array, e.g. \"{6,5,4,3,2,1;1,2,3,4,5,6}\"")->required();
  check->add_option("--assume", assume, "quadrangle | quadrangle-free");
  check->add_flag("--json", json, "JSON report");

  auto* derive = app.add_subcommand("derive", "Derived parameters of an array");
  derive->add_option("array", array_text, "Intersection array")->required();
  derive->add_flag("--spectrum", spectrum, "Eigenvalues and multiplicities");
  derive->add_flag("--pnumbers", pnumbers, "Full p^i_{jh} table");
  derive->add_flag("--json", json, "JSON report");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Search all arrays of one diameter up to a valency bound");
  enumerate->add_option("--diameter", ea.diameter, "Diameter D")->required();
  enumerate->add_option("--max-k", ea.k_max, "Largest valency")->required();
  enumerate->add_option("--min-k", ea.k_min, "Smallest valency (default 3)");
  enumerate->add_option("--filter", ea.filter, "Filter, e.g. \"3*c2>k\"");
  enumerate->add_option("--assume", ea.assume, "quadrangle | quadrangle-free");
  enumerate->add_option("--rules", ea.rules, "Comma-separated rule ids (default: all)");
  enumerate->add_option("--budget", ea.budget, "Node budget (default 1e8)");
  enumerate->add_flag("--json", ea.json, "JSON result");
  enumerate->add_flag("--progress", ea.progress, "Status line on stderr every 10^6 nodes");

  auto* graph = app.add_subcommand("graph", "Explicit graphs");
  graph->require_subcommand(1);
  std::string target;
  auto* verify = graph->add_subcommand("verify", "BFS check of distance-regularity");
  verify->add_option("graph", target, "Builtin name or drg-graph file")->required();
  verify->add_flag("--cross-check", cross, "Compare against derived parameters and spectrum");
  verify->add_flag("--json", json, "JSON report");

  auto* catalog = app.add_subcommand("catalog", "Named arrays");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "name, D, n, array (tab-separated)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(array_text, assume, json);
    if (*derive) return run_derive(array_text, spectrum, pnumbers, json);
    if (*enumerate) return run_enumerate(ea);
    if (*verify) return run_graph_verify(target, cross, json);
    if (*list) return run_catalog_list();
  } catch (const drg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const drg::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
