#include "genpos/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace genpos {

namespace {

constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw OutOfRangeError("vertex set universe must be non-negative");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > kWordBits)
    throw OutOfRangeError("from_mask requires universe <= 64");
  VertexSet s(universe);
  if (universe > 0) {
    std::uint64_t valid = universe == kWordBits
                              ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << universe) - 1);
    s.words_[0] = mask & valid;
  }
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::check_range(int v) const {
  if (v < 0 || v >= universe_) {
    std::ostringstream os;
    os << "vertex " << v << " outside universe [0," << universe_ << ")";
    throw OutOfRangeError(os.str());
  }
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

void VertexSet::insert(int v) {
  check_range(v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
  check_range(v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  int tail = universe_ % kWordBits;
  if (tail != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw OutOfRangeError("vertex set universes differ");
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    s.words_[i] = words_[i] & other.words_[i];
  return s;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw OutOfRangeError("vertex set universes differ");
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    s.words_[i] = words_[i] | other.words_[i];
  return s;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw OutOfRangeError("vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * kWordBits + b);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::mask64() const {
  if (universe_ > kWordBits) throw TooLargeError("mask64 requires universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    std::ostringstream os;
    os << "vertex " << u << " outside [0," << n_ << ")";
    throw NoSuchVertexError(os.str());
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u][v / kWordBits] >> (v % kWordBits)) & 1u;
}

const std::vector<int>& Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[u];
}

int Graph::degree(int u) const {
  check_vertex(u);
  return static_cast<int>(adj_[u].size());
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back(EdgeRef(u, v));
  return out;
}

std::uint64_t Graph::neighbors_mask64(int u) const {
  check_vertex(u);
  if (n_ > kWordBits) throw TooLargeError("neighbors_mask64 requires n <= 64");
  return bits_[u].empty() ? 0 : bits_[u][0];
}

Graph Graph::renamed(std::string new_name) const {
  Graph g = *this;
  g.name_ = std::move(new_name);
  return g;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges,
                  std::string name) {
  if (n < 0) throw OutOfRangeError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.bits_.assign(static_cast<std::size_t>(n),
                 std::vector<std::uint64_t>(static_cast<std::size_t>(word_count(n)), 0));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "edge endpoint (" << u << "," << v << ") outside [0," << n << ")";
      throw OutOfRangeError(os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "self-loop at vertex " << u;
      throw SelfLoopError(os.str());
    }
    g.bits_[u][v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    g.bits_[v][u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  }
  g.adj_.assign(static_cast<std::size_t>(n), {});
  int twice_edges = 0;
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < word_count(n); ++w) {
      std::uint64_t word = g.bits_[u][w];
      while (word) {
        int b = std::countr_zero(word);
        g.adj_[u].push_back(w * kWordBits + b);
        word &= word - 1;
      }
    }
    twice_edges += static_cast<int>(g.adj_[u].size());
  }
  g.edge_count_ = twice_edges / 2;
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges,
                  std::string name) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()),
                     std::move(name));
}

VertexDeletion delete_vertex(const Graph& g, int x) {
  int n = g.vertex_count();
  if (x < 0 || x >= n) throw NoSuchVertexError("no such vertex to delete");
  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int u = 0; u < n; ++u)
    if (u != x) old_to_new[u] = next++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const EdgeRef& e : g.edges())
    if (e.u != x && e.v != x)
      edges.emplace_back(old_to_new[e.u], old_to_new[e.v]);
  return VertexDeletion{build_graph(n - 1, edges, g.name()), std::move(old_to_new)};
}

Graph delete_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e)) throw NoSuchEdgeError("no such edge to delete");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count() - 1));
  for (const EdgeRef& f : g.edges())
    if (!(f == e)) edges.emplace_back(f.u, f.v);
  return build_graph(g.vertex_count(), edges, g.name());
}

std::string to_dot(const Graph& g, const VertexSet& highlight) {
  std::ostringstream os;
  os << "graph";
  if (!g.name().empty()) os << " \"" << g.name() << "\"";
  os << " {\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    os << "  " << u;
    if (highlight.contains(u)) os << " [style=filled, fillcolor=lightblue]";
    os << ";\n";
  }
  for (const EdgeRef& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g) { return to_dot(g, VertexSet(g.vertex_count())); }

}  // namespace genpos
