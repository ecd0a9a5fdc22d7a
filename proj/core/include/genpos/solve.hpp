#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "genpos/graph.hpp"
#include "genpos/position.hpp"

namespace genpos {

/// Vertex caps for the exact kernels: single-word bitsets for the solvers,
/// full subset enumeration for the oracle.
inline constexpr int kSolverMaxVertices = 64;
inline constexpr int kOracleMaxVertices = 20;

enum class SolveMethod { Simplicial, SrgClique, BranchBound, BruteForce };

const char* method_name(SolveMethod m);

struct SolveResult {
  PositionKind kind = PositionKind::General;
  int size = 0;
  VertexSet witness;
  SolveMethod method = SolveMethod::BranchBound;
  std::int64_t millis = 0;
};

/// Largest set of the requested kind. Total uses S(G) directly, Outer the
/// maximum clique of the strong resolving graph, General a branch-and-bound
/// over the hereditary family, and Dual the same search filtered by convexity
/// of the complement. Ties break to the lexicographically smallest witness.
///
/// Disconnected input is solved per component and summed for General, Total
/// and Outer (pairs across components impose no constraints); Dual requires a
/// connected graph.
SolveResult max_position_set(const Graph& g, PositionKind kind);

/// Exact maximum clique, bitset branch-and-bound with a greedy coloring
/// bound; witness is the lexicographically smallest maximum clique.
std::pair<int, VertexSet> max_clique(const Graph& g);

/// Exact independence number via max_clique on the complement.
std::pair<int, VertexSet> independence_number(const Graph& g);

/// Largest set of the requested kind containing x, or nullopt when no such
/// set exists. x lies in some maximum set iff the forced size equals the
/// unforced optimum.
std::optional<SolveResult> solve_forced(const Graph& g, PositionKind kind,
                                        int x);

/// Exhaustive subset enumeration in decreasing cardinality, each candidate
/// tested with check_set. Independent of the solver kernels.
SolveResult brute_force_oracle(const Graph& g, PositionKind kind);

/// True iff every edge uv extends to an isometric path a-u-v-b. Graphs with
/// this property have dual number 0.
bool dual_zero_certificate(const Graph& g);

}  // namespace genpos
