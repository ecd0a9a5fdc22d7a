#pragma once

#include <optional>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

/// All-pairs hop distances. Pairs in different components are Unreachable,
/// an explicit sentinel; never a large finite stand-in.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

  friend DistanceMatrix distance_matrix(const Graph& g);

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// BFS-exact hop distances from every source.
DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Component id per vertex, ids assigned in order of smallest member.
std::vector<int> connected_components(const Graph& g);

/// Vertices whose deletion increases the number of components.
VertexSet cut_vertices(const Graph& g);

struct ConvexityWitness {
  int u = 0;  // endpoint in C
  int w = 0;  // geodesic interior vertex outside C
  int v = 0;  // endpoint in C
};

/// True iff no shortest path between members of C leaves C. Defined for
/// connected graphs only.
bool is_convex(const Graph& g, const VertexSet& c);
bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& c);

/// Concrete violating triple when the set is not convex, nullopt otherwise.
std::optional<ConvexityWitness> convexity_witness(const Graph& g,
                                                  const DistanceMatrix& d,
                                                  const VertexSet& c);

/// True iff every biconnected component induces a complete subgraph.
bool is_block_graph(const Graph& g);

}  // namespace genpos
