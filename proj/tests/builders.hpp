#pragma once

// Small independent graph builders for tests; kept separate from the
// families module so cross-checks do not share a construction path.

#include <utility>
#include <vector>

#include "genpos/graph.hpp"

namespace testutil {

using genpos::Graph;

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return genpos::build_graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return genpos::build_graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return genpos::build_graph(n, edges);
}

// Star with center 0 and n leaves.
inline Graph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return genpos::build_graph(n + 1, edges);
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return genpos::build_graph(a + b, edges);
}

// Path 0..n-1 plus the universal vertex n.
inline Graph fan_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
  return genpos::build_graph(n + 1, edges);
}

}  // namespace testutil
