#include "genpos/removal.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

#include "genpos/metric.hpp"

namespace genpos {

namespace {

constexpr int kConnectedCounts[7] = {0, 1, 1, 4, 38, 728, 26704};

struct GraphContext {
  std::string g6;
  std::string name;
  VertexSet cuts;
  VertexSet simplicial;
  std::map<PositionKind, int> before;
};

constexpr PositionKind kAllKinds[] = {PositionKind::General, PositionKind::Total,
                                      PositionKind::Outer, PositionKind::Dual};

GraphContext make_context(const Graph& g) {
  if (!is_connected(g))
    throw DisconnectedError("removal reports require a connected graph");
  GraphContext ctx;
  ctx.g6 = graph6_encode(g);
  ctx.name = g.name().empty() ? ctx.g6 : g.name();
  ctx.cuts = cut_vertices(g);
  ctx.simplicial = simplicial_vertices(g);
  for (PositionKind kind : kAllKinds)
    ctx.before[kind] = max_position_set(g, kind).size;
  return ctx;
}

bool forced_matches(const Graph& g, PositionKind kind, int x, int unforced) {
  std::optional<SolveResult> forced = solve_forced(g, kind, x);
  return forced && forced->size == unforced;
}

void push_bound(RemovalReport& report, std::string id, bool applicable,
                std::optional<int> lhs, std::optional<int> rhs) {
  BoundVerdict verdict;
  verdict.id = std::move(id);
  verdict.applicable = applicable && lhs && rhs;
  if (verdict.applicable) {
    verdict.lhs = lhs;
    verdict.rhs = rhs;
    verdict.holds = *lhs <= *rhs;
  }
  report.bounds.push_back(std::move(verdict));
}

RemovalReport vertex_report(const Graph& g, const GraphContext& ctx, int x) {
  if (x < 0 || x >= g.vertex_count())
    throw NoSuchVertexError("removal vertex not in graph");
  RemovalReport report;
  report.graph_name = ctx.name;
  report.graph6 = ctx.g6;
  report.element = x;
  report.removed_degree = g.degree(x);
  report.before = ctx.before;

  bool non_cut = !ctx.cuts.contains(x);
  bool simplicial = ctx.simplicial.contains(x);
  report.premises["non_cut"] = non_cut;
  report.premises["simplicial"] = simplicial;
  report.premises["in_gp_set"] =
      forced_matches(g, PositionKind::General, x, ctx.before.at(PositionKind::General));
  report.premises["in_gpo_set"] =
      forced_matches(g, PositionKind::Outer, x, ctx.before.at(PositionKind::Outer));
  report.premises["in_gpd_set"] =
      forced_matches(g, PositionKind::Dual, x, ctx.before.at(PositionKind::Dual));

  report.after_connected = non_cut;
  for (PositionKind kind : kAllKinds) report.after[kind] = std::nullopt;
  if (non_cut) {
    Graph reduced = delete_vertex(g, x).graph;
    for (PositionKind kind : kAllKinds)
      report.after[kind] = max_position_set(reduced, kind).size;
  }

  int deg = g.degree(x);
  int gpt = ctx.before.at(PositionKind::Total);
  int gpo = ctx.before.at(PositionKind::Outer);
  int gpd = ctx.before.at(PositionKind::Dual);
  int gp = ctx.before.at(PositionKind::General);
  const std::optional<int>& agpt = report.after.at(PositionKind::Total);
  const std::optional<int>& agpo = report.after.at(PositionKind::Outer);
  const std::optional<int>& agpd = report.after.at(PositionKind::Dual);
  const std::optional<int>& agp = report.after.at(PositionKind::General);

  push_bound(report, "B1.lower", non_cut, gpt - 1, agpt);
  push_bound(report, "B1.upper", non_cut, agpt, gpt + deg);
  push_bound(report, "B2", simplicial, agpt, gpt + deg - 1);
  push_bound(report, "B3", non_cut && report.premises.at("in_gpo_set"), gpo - 1,
             agpo);
  push_bound(report, "B4", simplicial, agpo, gpo + deg - 1);
  push_bound(report, "B5", non_cut && report.premises.at("in_gpd_set"), gpd - 1,
             agpd);
  push_bound(report, "B6", non_cut, agpo, gpo + deg);
  push_bound(report, "B7.upper", non_cut, agp, 2 * gp);
  push_bound(report, "B7.lower", non_cut && report.premises.at("in_gp_set"),
             gp - 1, agp);
  return report;
}

RemovalReport edge_report(const Graph& g, const GraphContext& ctx, EdgeRef e) {
  if (!g.has_edge(e)) throw NoSuchEdgeError("removal edge not in graph");
  RemovalReport report;
  report.graph_name = ctx.name;
  report.graph6 = ctx.g6;
  report.element = e;
  report.before = ctx.before;

  Graph reduced = delete_edge(g, e);
  report.after_connected = is_connected(reduced);
  for (PositionKind kind : kAllKinds) report.after[kind] = std::nullopt;
  for (PositionKind kind :
       {PositionKind::General, PositionKind::Total, PositionKind::Outer})
    report.after[kind] = max_position_set(reduced, kind).size;
  if (report.after_connected)
    report.after[PositionKind::Dual] =
        max_position_set(reduced, PositionKind::Dual).size;

  int se = simplicial_common_neighbors(g, e).count();
  int gpt = ctx.before.at(PositionKind::Total);
  int gpo = ctx.before.at(PositionKind::Outer);
  int gpd = ctx.before.at(PositionKind::Dual);
  int gp = ctx.before.at(PositionKind::General);
  const std::optional<int>& agpt = report.after.at(PositionKind::Total);
  const std::optional<int>& agpo = report.after.at(PositionKind::Outer);
  const std::optional<int>& agpd = report.after.at(PositionKind::Dual);
  const std::optional<int>& agp = report.after.at(PositionKind::General);

  // Ratio bounds are kept integral by scaling the smaller side by two.
  push_bound(report, "E1.lower", true, gpt - se, agpt);
  push_bound(report, "E1.upper", true, agpt, gpt + 2);
  push_bound(report, "E2.lower", true, gpo,
             agpo ? std::optional<int>(2 * *agpo) : std::nullopt);
  push_bound(report, "E2.upper", true, agpo, 2 * gpo);
  push_bound(report, "E3.lower", true, gp,
             agp ? std::optional<int>(2 * *agp) : std::nullopt);
  push_bound(report, "E3.upper", true, agp, 2 * gp);
  // E4 is a demonstration of the unbounded dual drop, not an inequality.
  {
    BoundVerdict verdict;
    verdict.id = "E4";
    verdict.applicable = report.after_connected && agpd.has_value();
    if (verdict.applicable) {
      verdict.lhs = gpd;
      verdict.rhs = agpd;
      verdict.holds = true;
    }
    report.bounds.push_back(std::move(verdict));
  }
  return report;
}

// Deterministic parallel map: slot i always holds f(i).
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<T> out(count);
  threads = std::min<std::size_t>(std::max(threads, 1), count == 0 ? 1 : count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < count;
             i += static_cast<std::size_t>(threads))
          out[i] = f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

const BoundVerdict* RemovalReport::find_bound(std::string_view id) const {
  for (const BoundVerdict& b : bounds)
    if (b.id == id) return &b;
  return nullptr;
}

RemovalReport vertex_removal_report(const Graph& g, int x) {
  return vertex_report(g, make_context(g), x);
}

RemovalReport edge_removal_report(const Graph& g, EdgeRef e) {
  return edge_report(g, make_context(g), e);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > kSolverMaxVertices)
    throw BadParametersError("random graph needs 1 <= n <= 64");
  if (!(p > 0.0) || p > 1.0)
    throw BadParametersError("random graph needs 0 < p <= 1");
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws against a fixed threshold keep the sample sequence
  // identical across platforms.
  const double two53 = 9007199254740992.0;
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * two53);
  constexpr int kMaxAttempts = 10000;
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    edges.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw GaveUpError("no connected sample in 10000 attempts");
}

void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw BadParametersError("enumeration needs n >= 1");
  if (n > 6) throw TooLargeError("exhaustive enumeration is capped at n = 6");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    Graph g = build_graph(n, edges);
    if (is_connected(g)) fn(g);
  }
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(kConnectedCounts[std::min(n, 6)]));
  enumerate_connected_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> manifest_corpus(const SweepManifest& manifest) {
  if (manifest.mode == SweepManifest::Mode::Enumerate)
    return connected_graphs(manifest.n);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(manifest.count));
  for (int i = 0; i < manifest.count; ++i)
    out.push_back(random_connected_graph(manifest.n, manifest.p,
                                         manifest.seed + static_cast<std::uint64_t>(i)));
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("GENPOS_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

std::vector<ConjectureViolation> conjecture_sweep(
    const std::vector<Graph>& corpus, int threads) {
  threads = resolve_threads(threads);
  auto per_graph = parallel_map<std::vector<ConjectureViolation>>(
      corpus.size(), threads, [&](std::size_t i) {
        const Graph& g = corpus[i];
        std::vector<ConjectureViolation> found;
        VertexSet cuts = cut_vertices(g);
        int gpo = max_position_set(g, PositionKind::Outer).size;
        for (int x = 0; x < g.vertex_count(); ++x) {
          if (cuts.contains(x)) continue;
          Graph reduced = delete_vertex(g, x).graph;
          int after = max_position_set(reduced, PositionKind::Outer).size;
          if (after > gpo + g.degree(x))
            found.push_back(ConjectureViolation{graph6_encode(g), x,
                                                vertex_removal_report(g, x)});
        }
        return found;
      });
  std::vector<ConjectureViolation> all;
  for (auto& part : per_graph)
    for (auto& v : part) all.push_back(std::move(v));
  std::stable_sort(all.begin(), all.end(),
                   [](const ConjectureViolation& a, const ConjectureViolation& b) {
                     if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
                     return a.vertex < b.vertex;
                   });
  return all;
}

SweepResult run_sweep(const std::vector<Graph>& corpus, int threads) {
  threads = resolve_threads(threads);
  auto per_graph = parallel_map<std::vector<RemovalReport>>(
      corpus.size(), threads, [&](std::size_t i) {
        const Graph& g = corpus[i];
        GraphContext ctx = make_context(g);
        std::vector<RemovalReport> reports;
        reports.reserve(static_cast<std::size_t>(g.vertex_count() + g.edge_count()));
        for (int x = 0; x < g.vertex_count(); ++x)
          reports.push_back(vertex_report(g, ctx, x));
        for (const EdgeRef& e : g.edges())
          reports.push_back(edge_report(g, ctx, e));
        return reports;
      });

  SweepResult result;
  for (auto& part : per_graph)
    for (auto& report : part) result.reports.push_back(std::move(report));

  for (const RemovalReport& report : result.reports) {
    for (const BoundVerdict& b : report.bounds) {
      if (!b.applicable || !b.holds.has_value()) continue;
      if (*b.holds) continue;
      if (b.id == "B6") {
        result.conjecture_violations.push_back(ConjectureViolation{
            report.graph6, std::get<int>(report.element), report});
      } else if (b.id != "E4") {
        result.assertion_failures.push_back(report);
      }
    }
  }
  std::stable_sort(result.conjecture_violations.begin(),
                   result.conjecture_violations.end(),
                   [](const ConjectureViolation& a, const ConjectureViolation& b) {
                     if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
                     return a.vertex < b.vertex;
                   });
  return result;
}

std::vector<std::pair<std::string, std::vector<int>>> verification_grid() {
  return {
      {"Gn", {2}},     {"Gn", {3}},     {"Gn", {4}},    {"Fn", {4}},
      {"Fn", {5}},     {"Fn", {6}},     {"Fn", {7}},    {"Mk", {4}},
      {"Mk", {5}},     {"Tk", {3}},     {"Tk", {4}},    {"Tk", {5}},
      {"Yk", {2}},     {"Yk", {3}},     {"Yk", {4}},    {"Hn", {1}},
      {"Hn", {2}},     {"Hn", {3}},     {"K1n", {3}},   {"K1n", {4}},
      {"K1n", {5}},    {"K2n", {3}},    {"K2n", {4}},   {"Kne", {5}},
      {"Kne", {6}},    {"Gnk", {5, 2}}, {"Gnk", {7, 3}}, {"Xn", {4}},
      {"Xn", {5}},     {"Ypn", {3}},    {"Ypn", {4}},   {"Zn", {2}},
      {"Zn", {3}},     {"Kn", {5}},     {"Kn", {6}},
  };
}

std::vector<FamilyCheckRow> family_verification() {
  std::vector<FamilyCheckRow> rows;
  for (const auto& [family, params] : verification_grid()) {
    FamilyInstance inst = make_family(family, params);
    std::optional<Graph> reduced;
    if (inst.distinguished_vertex)
      reduced = delete_vertex(inst.graph, *inst.distinguished_vertex).graph;
    else if (inst.distinguished_edge)
      reduced = delete_edge(inst.graph, *inst.distinguished_edge);
    for (Phase phase : {Phase::Before, Phase::After}) {
      for (PositionKind kind : kAllKinds) {
        std::optional<int> expected = inst.expected_value(kind, phase);
        if (!expected) continue;
        const Graph& target = phase == Phase::Before ? inst.graph : *reduced;
        int computed = max_position_set(target, kind).size;
        rows.push_back(FamilyCheckRow{inst.family, inst.params, kind, phase,
                                      *expected, computed,
                                      computed == *expected});
      }
    }
  }
  return rows;
}

}  // namespace genpos
