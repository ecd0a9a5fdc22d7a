#include "genpos/metric.hpp"

#include <algorithm>

namespace genpos {

DistanceMatrix distance_matrix(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix m;
  m.n_ = n;
  m.d_.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    int* dist = m.d_.data() + static_cast<std::size_t>(s) * n;
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (dist[v] == DistanceMatrix::kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return m;
}

std::vector<int> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int v : g.neighbors(queue[head]))
        if (comp[v] == -1) {
          comp[v] = next;
          queue.push_back(v);
        }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<int> comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

// Iterative Tarjan lowpoint traversal shared by cut_vertices and the
// biconnected-component decomposition.
struct DfsFrame {
  int vertex;
  int parent;
  std::size_t next_neighbor;
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  int n = g.vertex_count();
  VertexSet cuts(n);
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<DfsFrame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      DfsFrame& f = stack.back();
      const std::vector<int>& nbrs = g.neighbors(f.vertex);
      if (f.next_neighbor < nbrs.size()) {
        int w = nbrs[f.next_neighbor++];
        if (disc[w] == -1) {
          if (f.vertex == root) ++root_children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.vertex, 0});
        } else if (w != f.parent) {
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        int v = f.vertex;
        int p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cuts.insert(p);
        }
      }
    }
    if (root_children >= 2) cuts.insert(root);
  }
  return cuts;
}

std::optional<ConvexityWitness> convexity_witness(const Graph& g,
                                                  const DistanceMatrix& d,
                                                  const VertexSet& c) {
  if (!is_connected(g)) throw DisconnectedError("convexity requires a connected graph");
  std::vector<int> members = c.to_vector();
  if (!members.empty() && members.back() >= g.vertex_count())
    throw NoSuchVertexError("convexity set outside vertex range");
  std::vector<int> outside;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (!c.contains(w)) outside.push_back(w);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int u = members[i];
      int v = members[j];
      int duv = d(u, v);
      for (int w : outside)
        if (d(u, w) + d(w, v) == duv) return ConvexityWitness{u, w, v};
    }
  }
  return std::nullopt;
}

bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& c) {
  return !convexity_witness(g, d, c).has_value();
}

bool is_convex(const Graph& g, const VertexSet& c) {
  return is_convex(g, distance_matrix(g), c);
}

bool is_block_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  std::vector<EdgeRef> edge_stack;

  auto component_is_clique = [&](std::size_t from) {
    std::vector<int> verts;
    for (std::size_t i = from; i < edge_stack.size(); ++i) {
      verts.push_back(edge_stack[i].u);
      verts.push_back(edge_stack[i].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    edge_stack.resize(from);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<DfsFrame> stack{{root, -1, 0}};
    std::vector<std::size_t> edge_mark{edge_stack.size()};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      DfsFrame& f = stack.back();
      const std::vector<int>& nbrs = g.neighbors(f.vertex);
      if (f.next_neighbor < nbrs.size()) {
        int w = nbrs[f.next_neighbor++];
        if (disc[w] == -1) {
          edge_stack.push_back(EdgeRef(f.vertex, w));
          edge_mark.push_back(edge_stack.size() - 1);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.vertex, 0});
        } else if (w != f.parent && disc[w] < disc[f.vertex]) {
          edge_stack.push_back(EdgeRef(f.vertex, w));
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        int v = f.vertex;
        int p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          std::size_t mark = edge_mark.back();
          edge_mark.pop_back();
          if (low[v] >= disc[p]) {
            if (!component_is_clique(mark)) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace genpos
