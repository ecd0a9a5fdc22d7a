#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "genpos/families.hpp"
#include "genpos/graph.hpp"
#include "genpos/solve.hpp"

namespace genpos {

/// One side of one inequality from the bound registry. holds is only
/// meaningful when the bound's premises are satisfied.
struct BoundVerdict {
  std::string id;
  bool applicable = false;
  std::optional<bool> holds;
  std::optional<int> lhs;  // inequality is lhs <= rhs
  std::optional<int> rhs;
};

/// Invariants before/after one deletion, with premise tracking and a verdict
/// per registered bound.
///
/// Vertex bounds (premises in parentheses):
///   B1.lower  gpt(G)-1 <= gpt(G-x)                (non_cut)
///   B1.upper  gpt(G-x) <= gpt(G)+deg(x)           (non_cut)
///   B2        gpt(G-x) <= gpt(G)+deg(x)-1         (simplicial)
///   B3        gpo(G)-1 <= gpo(G-x)                (non_cut, in_gpo_set)
///   B4        gpo(G-x) <= gpo(G)+deg(x)-1         (simplicial)
///   B5        gpd(G)-1 <= gpd(G-x)                (non_cut, in_gpd_set)
///   B6        gpo(G-x) <= gpo(G)+deg(x)           (non_cut; conjectured,
///             reported but never asserted)
///   B7.upper  gp(G-x) <= 2*gp(G)                  (non_cut)
///   B7.lower  gp(G)-1 <= gp(G-x)                  (non_cut, in_gp_set)
/// Edge bounds:
///   E1.lower  gpt(G)-|S(G)_e| <= gpt(G-e)
///   E1.upper  gpt(G-e) <= gpt(G)+2
///   E2.lower  gpo(G) <= 2*gpo(G-e)
///   E2.upper  gpo(G-e) <= 2*gpo(G)
///   E3.lower  gp(G) <= 2*gp(G-e)
///   E3.upper  gp(G-e) <= 2*gp(G)
///   E4        dual drop gpd(G) - gpd(G-e), demonstration only (needs G-e
///             connected)
struct RemovalReport {
  std::string graph_name;
  std::string graph6;
  std::variant<int, EdgeRef> element;
  std::optional<int> removed_degree;  // vertex removal only
  std::map<std::string, bool> premises;
  std::map<PositionKind, int> before;
  /// After-values. Vertex removal leaves them empty when G-x is
  /// disconnected; edge removal computes General/Total/Outer per component
  /// and leaves only Dual empty when G-e is disconnected.
  std::map<PositionKind, std::optional<int>> after;
  bool after_connected = true;
  std::vector<BoundVerdict> bounds;

  const BoundVerdict* find_bound(std::string_view id) const;
};

RemovalReport vertex_removal_report(const Graph& g, int x);
RemovalReport edge_removal_report(const Graph& g, EdgeRef e);

/// Connected G(n, p) sample, resampled until connected; deterministic in
/// (n, p, seed). Throws GaveUpError after 10000 rejected samples.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// All connected labeled graphs on n <= 6 vertices, edge-mask order.
void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn);
std::vector<Graph> connected_graphs(int n);

struct SweepManifest {
  enum class Mode { Enumerate, Random };
  Mode mode = Mode::Enumerate;
  int n = 0;
  double p = 0.5;        // random mode
  int count = 0;         // random mode
  std::uint64_t seed = 0;  // random mode; sample i uses seed+i
};

std::vector<Graph> manifest_corpus(const SweepManifest& manifest);

/// Worker count for corpus sweeps: the requested value, or when requested
/// <= 0 the hardware concurrency capped by the GENPOS_THREADS variable.
int resolve_threads(int requested);

struct ConjectureViolation {
  std::string graph6;
  int vertex = 0;
  RemovalReport report;
};

/// Evaluates the conjectured bound B6 for every non-cut vertex of every
/// corpus graph. Violations are data, not errors; they come back sorted by
/// graph6 string for deterministic output.
std::vector<ConjectureViolation> conjecture_sweep(
    const std::vector<Graph>& corpus, int threads = 0);

struct SweepResult {
  std::vector<RemovalReport> reports;  // vertices then edges per graph
  std::vector<ConjectureViolation> conjecture_violations;
  /// Reports containing an applicable proven bound that fails. Always empty
  /// unless the implementation is wrong; callers treat entries as fatal.
  std::vector<RemovalReport> assertion_failures;
};

SweepResult run_sweep(const std::vector<Graph>& corpus, int threads = 0);

struct FamilyCheckRow {
  std::string family;
  std::vector<int> params;
  PositionKind kind = PositionKind::General;
  Phase phase = Phase::Before;
  int expected = 0;
  int computed = 0;
  bool pass = false;
};

/// Solves every family instance of the verification grid and compares
/// against its expected-value table. Mismatches are rows with pass = false.
std::vector<FamilyCheckRow> family_verification();

/// The (family, params) grid used by family_verification.
std::vector<std::pair<std::string, std::vector<int>>> verification_grid();

}  // namespace genpos
