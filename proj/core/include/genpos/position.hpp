#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genpos/graph.hpp"
#include "genpos/metric.hpp"

namespace genpos {

/// The four set variants. General constrains pairs inside Z, Total all pairs
/// of the graph, Outer additionally the Z-to-complement pairs, and Dual
/// additionally the pairs inside the complement.
enum class PositionKind { General, Total, Outer, Dual };

const char* kind_name(PositionKind kind);
std::optional<PositionKind> kind_from_name(std::string_view name);

/// True iff no vertex of Z \ {x, y} is an interior vertex of a shortest
/// x,y-path, decided through the distance identity d(x,w)+d(w,y) = d(x,y).
/// Unreachable pairs carry no geodesics and are trivially positionable.
bool z_positionable(const Graph& g, const DistanceMatrix& d, int x, int y,
                    const VertexSet& z);

bool check_set(const Graph& g, const VertexSet& z, PositionKind kind);
bool check_set(const Graph& g, const DistanceMatrix& d, const VertexSet& z,
               PositionKind kind);

struct CheckDiagnostics {
  PositionKind kind = PositionKind::General;
  bool holds = true;
  struct Witness {
    int u = 0;  // violating pair
    int v = 0;
    int w = 0;  // member of Z interior to a u,v-geodesic
  };
  std::optional<Witness> witness;
};

CheckDiagnostics check_set_diagnostics(const Graph& g, const VertexSet& z,
                                       PositionKind kind);
CheckDiagnostics check_set_diagnostics(const Graph& g, const DistanceMatrix& d,
                                       const VertexSet& z, PositionKind kind);

/// S(G): vertices whose open neighborhood induces a complete subgraph.
VertexSet simplicial_vertices(const Graph& g);

/// u and v are mutually maximally distant: no neighbor of either is farther
/// from the other vertex than the pair distance.
bool is_mmd(const Graph& g, const DistanceMatrix& d, int u, int v);

/// Graph on V(G) whose edges are exactly the MMD pairs of g.
Graph strong_resolving_graph(const Graph& g);

/// Unordered pairs with identical closed neighborhoods.
std::vector<std::pair<int, int>> true_twins(const Graph& g);

/// Clique partition of a general position set: parts are the components of
/// G[X], inter-part distances are constant, and no part lies distance-wise
/// between two others.
struct GpStructure {
  std::vector<VertexSet> cliques;
  /// part_distance[i][j] for i != j; -1 on the diagonal.
  std::vector<std::vector<int>> part_distance;
};

struct GpValidation {
  bool ok = false;
  GpStructure structure;  // populated when ok
  std::string reason;     // human-readable failure description otherwise
};

GpValidation validate_gp_structure(const Graph& g, const VertexSet& x);
GpValidation validate_gp_structure(const Graph& g, const DistanceMatrix& d,
                                   const VertexSet& x);

/// Simplicial vertices adjacent to both endpoints of e.
VertexSet simplicial_common_neighbors(const Graph& g, EdgeRef e);

/// The two overlapping halves of a general position set X with respect to an
/// edge uv: near_u collects the members not strictly closer to v, near_v the
/// members not strictly closer to u; equidistant members land in both.
struct EdgePartition {
  VertexSet near_u;
  VertexSet near_v;
};

EdgePartition edge_partition(const Graph& g, const VertexSet& x, EdgeRef e);

}  // namespace genpos
