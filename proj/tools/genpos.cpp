// genpos: exact general position numbers (gp, gp_t, gp_o, gp_d) of small
// graphs, family generators, removal reports and corpus sweeps.
//
// Graphs enter as graph6 lines on stdin, --g6, or an edge-list JSON file;
// they leave as graph6, JSON, DOT or a human summary, so commands compose
// through pipes:
//
//   genpos family Mk 4 --graph6 | genpos compute --kind dual --format json

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genpos/families.hpp"
#include "genpos/json_io.hpp"
#include "genpos/metric.hpp"
#include "genpos/removal.hpp"
#include "genpos/solve.hpp"

namespace {

using namespace genpos;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputSpec {
  std::string g6;
  std::string json_path;
};

std::vector<Graph> read_graphs(const InputSpec& in, bool all_lines) {
  std::vector<Graph> graphs;
  if (!in.g6.empty()) {
    graphs.push_back(graph6_decode(in.g6));
  } else if (!in.json_path.empty()) {
    std::ifstream f(in.json_path);
    if (!f) throw BadInputError("cannot open " + in.json_path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    graphs.push_back(graph_from_json(buffer.str()));
  } else {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      graphs.push_back(graph6_decode(line));
      if (!all_lines) break;
    }
    if (graphs.empty()) throw BadInputError("no graph on stdin");
  }
  return graphs;
}

void add_input_flags(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--g6", in.g6, "graph6 line");
  cmd->add_option("--in", in.json_path, "edge-list JSON file");
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw BadParametersError("unsupported --format " + format + " for this command");
}

std::vector<PositionKind> kinds_from_flag(const std::string& kind) {
  if (kind == "all")
    return {PositionKind::General, PositionKind::Total, PositionKind::Outer,
            PositionKind::Dual};
  auto k = kind_from_name(kind);
  if (!k) throw BadParametersError("unknown kind: " + kind);
  return {*k};
}

std::string witness_text(const VertexSet& w) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : w.to_vector()) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

int run_compute(const InputSpec& in, const std::string& kind,
                const std::string& format, bool verbose) {
  require_format(format, {"human", "json", "dot"});
  std::vector<PositionKind> kinds = kinds_from_flag(kind);
  if (format == "dot" && kinds.size() != 1)
    throw BadParametersError("dot output needs a single --kind");
  for (const Graph& g : read_graphs(in, true)) {
    for (PositionKind k : kinds) {
      SolveResult r = max_position_set(g, k);
      if (format == "json") {
        std::cout << solve_result_to_json(r, verbose) << "\n";
      } else if (format == "dot") {
        std::cout << to_dot(g, r.witness);
      } else {
        std::cout << kind_name(k) << ": size=" << r.size
                  << " witness=" << witness_text(r.witness)
                  << " method=" << method_name(r.method);
        if (verbose) std::cout << " millis=" << r.millis;
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

int run_check_set(const InputSpec& in, const std::string& kind,
                  const std::string& set_csv, const std::string& format) {
  require_format(format, {"human", "json"});
  auto k = kind_from_name(kind);
  if (!k) throw BadParametersError("check-set needs a single --kind");
  Graph g = read_graphs(in, false).front();
  VertexSet z(g.vertex_count());
  std::stringstream ss(set_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= g.vertex_count())
      throw BadInputError("set member " + item + " outside the vertex range");
    z.insert(v);
  }
  CheckDiagnostics diag = check_set_diagnostics(g, z, *k);
  if (format == "json") {
    std::cout << diagnostics_to_json(diag) << "\n";
  } else {
    std::cout << kind_name(*k) << (diag.holds ? " holds" : " fails");
    if (diag.witness)
      std::cout << ": pair (" << diag.witness->u << "," << diag.witness->v
                << ") blocked by " << diag.witness->w;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_family(const std::string& name, const std::vector<int>& params,
               const std::string& format) {
  require_format(format, {"human", "json", "dot", "graph6"});
  FamilyInstance f = make_family(name, params);
  if (format == "graph6") {
    std::cout << graph6_encode(f.graph) << "\n";
  } else if (format == "json") {
    std::cout << family_to_json(f) << "\n";
  } else if (format == "dot") {
    VertexSet highlight(f.graph.vertex_count());
    if (f.distinguished_vertex) highlight.insert(*f.distinguished_vertex);
    std::cout << to_dot(f.graph, highlight);
  } else {
    std::cout << f.graph.name() << ": n=" << f.graph.vertex_count()
              << " m=" << f.graph.edge_count();
    if (f.distinguished_vertex)
      std::cout << " distinguished_vertex=" << *f.distinguished_vertex;
    if (f.distinguished_edge)
      std::cout << " distinguished_edge=" << f.distinguished_edge->u << ","
                << f.distinguished_edge->v;
    std::cout << "\n";
    for (const auto& [key, value] : f.expected)
      std::cout << "  expected " << kind_name(key.first)
                << (key.second == Phase::Before ? " before" : " after") << " = "
                << value << "\n";
  }
  return kExitOk;
}

void print_report_human(const RemovalReport& r) {
  std::cout << r.graph_name << " ";
  if (std::holds_alternative<int>(r.element))
    std::cout << "- vertex " << std::get<int>(r.element);
  else
    std::cout << "- edge " << std::get<EdgeRef>(r.element).u << ","
              << std::get<EdgeRef>(r.element).v;
  std::cout << "\n  premises:";
  for (const auto& [name, value] : r.premises)
    std::cout << " " << name << "=" << (value ? "yes" : "no");
  std::cout << "\n  before:";
  for (const auto& [kind, size] : r.before)
    std::cout << " " << kind_name(kind) << "=" << size;
  std::cout << "\n  after: ";
  if (!r.after_connected) std::cout << "(disconnected)";
  for (const auto& [kind, size] : r.after) {
    std::cout << " " << kind_name(kind) << "=";
    if (size)
      std::cout << *size;
    else
      std::cout << "unavailable";
  }
  std::cout << "\n  bounds:\n";
  for (const BoundVerdict& b : r.bounds) {
    std::cout << "    " << b.id << ": ";
    if (!b.applicable) {
      std::cout << "not applicable\n";
      continue;
    }
    std::cout << *b.lhs << " <= " << *b.rhs << " "
              << (*b.holds ? "holds" : "VIOLATED") << "\n";
  }
}

int run_remove(const InputSpec& in, std::optional<int> vertex,
               const std::string& edge_csv, const std::string& format) {
  require_format(format, {"human", "json"});
  Graph g = read_graphs(in, false).front();
  if (vertex.has_value() == !edge_csv.empty())
    throw BadParametersError("remove needs exactly one of --vertex or --edge");
  RemovalReport report;
  if (vertex) {
    report = vertex_removal_report(g, *vertex);
  } else {
    int u, v;
    char comma;
    std::stringstream ss(edge_csv);
    if (!(ss >> u >> comma >> v) || comma != ',')
      throw BadInputError("--edge expects u,v");
    report = edge_removal_report(g, EdgeRef(u, v));
  }
  if (format == "json")
    std::cout << report_to_json(report) << "\n";
  else
    print_report_human(report);
  return kExitOk;
}

int run_sweep(const std::string& manifest_path, const std::string& mode,
              int n, double p, int count, std::uint64_t seed,
              const std::string& out_path, const std::string& violations_path,
              int threads) {
  SweepManifest manifest;
  if (!manifest_path.empty()) {
    std::ifstream f(manifest_path);
    if (!f) throw BadInputError("cannot open " + manifest_path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    manifest = manifest_from_json(buffer.str());
  } else {
    manifest.mode = mode == "random" ? SweepManifest::Mode::Random
                                     : SweepManifest::Mode::Enumerate;
    manifest.n = n;
    manifest.p = p;
    manifest.count = count;
    manifest.seed = seed;
  }

  std::vector<Graph> corpus = manifest_corpus(manifest);
  SweepResult result = genpos::run_sweep(corpus, threads);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw BadInputError("cannot open " + out_path);
    for (const RemovalReport& r : result.reports) out << report_to_json(r) << "\n";
  }
  if (!violations_path.empty()) {
    std::ofstream g6(violations_path);
    std::ofstream side(violations_path + ".jsonl");
    if (!g6 || !side) throw BadInputError("cannot open " + violations_path);
    for (const ConjectureViolation& v : result.conjecture_violations) {
      g6 << v.graph6 << "\n";
      side << violation_to_json(v) << "\n";
    }
  }

  std::cout << "graphs=" << corpus.size() << " reports=" << result.reports.size()
            << " conjecture_violations=" << result.conjecture_violations.size()
            << " bound_failures=" << result.assertion_failures.size() << "\n";
  for (const ConjectureViolation& v : result.conjecture_violations)
    std::cout << "conjecture violation: " << v.graph6 << " vertex " << v.vertex
              << "\n";
  if (!result.assertion_failures.empty()) {
    std::cerr << "proven bounds violated; this is an implementation bug:\n";
    for (const RemovalReport& r : result.assertion_failures)
      std::cerr << report_to_json(r) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_oracle_diff(const std::string& mode, int n, double p, int count,
                    std::uint64_t seed, const std::string& kind,
                    int oracle_max_n, int threads) {
  if (n > oracle_max_n)
    throw BadParametersError("corpus exceeds --oracle-max-n");
  SweepManifest manifest;
  manifest.mode = mode == "random" ? SweepManifest::Mode::Random
                                   : SweepManifest::Mode::Enumerate;
  manifest.n = n;
  manifest.p = p;
  manifest.count = count;
  manifest.seed = seed;
  std::vector<Graph> corpus = manifest_corpus(manifest);
  std::vector<PositionKind> kinds = kinds_from_flag(kind);
  (void)threads;

  int mismatches = 0;
  for (const Graph& g : corpus) {
    for (PositionKind k : kinds) {
      int fast = max_position_set(g, k).size;
      int slow = brute_force_oracle(g, k).size;
      if (fast != slow) {
        ++mismatches;
        std::cout << "mismatch " << graph6_encode(g) << " " << kind_name(k)
                  << " solver=" << fast << " oracle=" << slow << "\n";
      }
    }
  }
  std::cout << "graphs=" << corpus.size() << " kinds=" << kinds.size()
            << " mismatches=" << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact general position numbers, removal reports and sweeps"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "include timing in output");

  // compute
  InputSpec compute_in;
  std::string compute_kind = "all";
  std::string compute_format = "human";
  CLI::App* compute = app.add_subcommand("compute", "solve for maximum sets");
  add_input_flags(compute, compute_in);
  compute->add_option("--kind", compute_kind,
                      "general|total|outer|dual|all (default all)");
  compute->add_option("--format", compute_format, "human|json|dot");

  // check-set
  InputSpec check_in;
  std::string check_kind;
  std::string check_set_csv;
  std::string check_format = "human";
  CLI::App* check = app.add_subcommand("check-set", "test one vertex set");
  add_input_flags(check, check_in);
  check->add_option("--kind", check_kind, "general|total|outer|dual")->required();
  check->add_option("--set", check_set_csv, "comma-separated vertices")->required();
  check->add_option("--format", check_format, "human|json");

  // family
  std::string family_name;
  std::vector<int> family_params;
  std::string family_format = "human";
  bool flag_g6 = false, flag_json = false, flag_dot = false;
  CLI::App* family = app.add_subcommand("family", "emit a parametric family instance");
  family->add_option("name", family_name, "family id, e.g. Mk")->required();
  family->add_option("params", family_params, "integer parameters");
  family->add_option("--format", family_format, "human|json|dot|graph6");
  family->add_flag("--graph6", flag_g6, "shorthand for --format graph6");
  family->add_flag("--json", flag_json, "shorthand for --format json");
  family->add_flag("--dot", flag_dot, "shorthand for --format dot");

  // remove
  InputSpec remove_in;
  int remove_vertex = -1;
  bool remove_vertex_set = false;
  std::string remove_edge;
  std::string remove_format = "human";
  CLI::App* remove = app.add_subcommand("remove", "removal report for one element");
  add_input_flags(remove, remove_in);
  CLI::Option* rv = remove->add_option("--vertex", remove_vertex, "vertex to delete");
  remove->add_option("--edge", remove_edge, "edge to delete as u,v");
  remove->add_option("--format", remove_format, "human|json");
  rv->each([&](const std::string&) { remove_vertex_set = true; });

  // sweep
  std::string sweep_manifest;
  std::string sweep_mode = "enumerate";
  int sweep_n = 5;
  double sweep_p = 0.5;
  int sweep_count = 100;
  std::uint64_t sweep_seed = 0;
  std::string sweep_out;
  std::string sweep_violations;
  int sweep_threads = 0;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate every removal bound over a corpus");
  sweep->add_option("--manifest", sweep_manifest, "manifest JSON path");
  sweep->add_option("--mode", sweep_mode, "enumerate|random");
  sweep->add_option("--n", sweep_n, "vertex count");
  sweep->add_option("--p", sweep_p, "edge probability (random mode)");
  sweep->add_option("--count", sweep_count, "sample count (random mode)");
  sweep->add_option("--seed", sweep_seed, "base seed (random mode)");
  sweep->add_option("--out", sweep_out, "write report JSONL here");
  sweep->add_option("--violations", sweep_violations,
                    "write conjecture counterexamples here (graph6 + .jsonl)");
  sweep->add_option("--threads", sweep_threads, "worker cap (0 = auto)");

  // oracle-diff
  std::string diff_mode = "enumerate";
  int diff_n = 5;
  double diff_p = 0.5;
  int diff_count = 100;
  std::uint64_t diff_seed = 0;
  std::string diff_kind = "all";
  int diff_oracle_max_n = kOracleMaxVertices;
  int diff_threads = 0;
  CLI::App* diff = app.add_subcommand(
      "oracle-diff", "compare the solvers against brute force");
  diff->add_option("--mode", diff_mode, "enumerate|random");
  diff->add_option("--n", diff_n, "vertex count");
  diff->add_option("--p", diff_p, "edge probability (random mode)");
  diff->add_option("--count", diff_count, "sample count (random mode)");
  diff->add_option("--seed", diff_seed, "base seed (random mode)");
  diff->add_option("--kind", diff_kind, "general|total|outer|dual|all");
  diff->add_option("--oracle-max-n", diff_oracle_max_n, "refuse larger corpora");
  diff->add_option("--threads", diff_threads, "worker cap (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(compute_in, compute_kind, compute_format, verbose);
    if (*check) return run_check_set(check_in, check_kind, check_set_csv, check_format);
    if (*family) {
      if (flag_g6) family_format = "graph6";
      if (flag_json) family_format = "json";
      if (flag_dot) family_format = "dot";
      return run_family(family_name, family_params, family_format);
    }
    if (*remove)
      return run_remove(remove_in,
                        remove_vertex_set ? std::optional<int>(remove_vertex)
                                          : std::nullopt,
                        remove_edge, remove_format);
    if (*sweep)
      return run_sweep(sweep_manifest, sweep_mode, sweep_n, sweep_p, sweep_count,
                       sweep_seed, sweep_out, sweep_violations, sweep_threads);
    if (*diff)
      return run_oracle_diff(diff_mode, diff_n, diff_p, diff_count, diff_seed,
                             diff_kind, diff_oracle_max_n, diff_threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
