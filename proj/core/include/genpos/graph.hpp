#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genpos/errors.hpp"

namespace genpos {

/// Canonical undirected edge with u < v.
struct EdgeRef {
  int u = 0;
  int v = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Subset of the vertex range [0, universe) with dense bitset storage.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int count() const;
  bool empty() const { return count() == 0; }

  VertexSet complement() const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet unite(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  /// Members in ascending order.
  std::vector<int> to_vector() const;
  /// Bit i set iff vertex i is a member; requires universe <= 64.
  std::uint64_t mask64() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_range(int v) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }

  bool adjacent(int u, int v) const;
  bool has_edge(EdgeRef e) const { return adjacent(e.u, e.v); }
  const std::vector<int>& neighbors(int u) const;
  int degree(int u) const;
  /// All edges in lexicographic (u, v) order.
  std::vector<EdgeRef> edges() const;

  /// Neighborhood of u as a bitmask; requires n <= 64.
  std::uint64_t neighbors_mask64(int u) const;

  Graph renamed(std::string new_name) const;

  friend Graph build_graph(int n, std::span<const std::pair<int, int>> edges,
                           std::string name);

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::string name_;
  std::vector<std::vector<int>> adj_;           // sorted neighbor lists
  std::vector<std::vector<std::uint64_t>> bits_;  // adjacency rows, 64 bits/word
};

/// Builds a graph from an edge list. Duplicate edges collapse; endpoints are
/// validated against [0, n) and self-loops rejected.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges,
                  std::string name = "");
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges,
                  std::string name = "");

struct VertexDeletion {
  Graph graph;
  /// old_to_new[u] is the label of u in the reduced graph, -1 for the removed
  /// vertex. Remaining vertices keep their relative order.
  std::vector<int> old_to_new;
};

VertexDeletion delete_vertex(const Graph& g, int x);
Graph delete_edge(const Graph& g, EdgeRef e);

/// graph6 codec (canonical encoding, 6-bit big-endian upper-triangle packing).
std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph graph6_decode(std::string_view line);

/// DOT export with the given vertices drawn filled.
std::string to_dot(const Graph& g, const VertexSet& highlight);
std::string to_dot(const Graph& g);

}  // namespace genpos
