#include "genpos/solve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "genpos/metric.hpp"

namespace genpos {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline Mask below(int v) { return bit(v) - 1; }

inline Mask above(int v) { return ~(below(v) | bit(v)); }

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

void require_solver_size(const Graph& g) {
  if (g.vertex_count() > kSolverMaxVertices)
    throw TooLargeError("solver entry points are capped at 64 vertices");
}

// ---------------------------------------------------------------------------
// Exact clique kernel: branch and bound over single-word candidate masks with
// a greedy coloring bound.

class CliqueKernel {
 public:
  CliqueKernel(const std::vector<Mask>& adj, int n) : adj_(adj), n_(n) {}

  int max_size(Mask candidates, int base) {
    best_ = base;
    expand(candidates, base);
    return best_;
  }

  // Can base + |clique within candidates| reach target?
  bool reachable(Mask candidates, int base, int target) {
    target_ = target;
    return probe(candidates, base);
  }

 private:
  void expand(Mask cands, int size) {
    if (cands == 0) {
      best_ = std::max(best_, size);
      return;
    }
    int order[64];
    int colors[64];
    int m = color(cands, order, colors);
    Mask rest = cands;
    for (int i = m - 1; i >= 0; --i) {
      if (size + colors[i] <= best_) return;
      int v = order[i];
      rest &= ~bit(v);
      expand(rest & adj_[static_cast<std::size_t>(v)], size + 1);
    }
  }

  bool probe(Mask cands, int size) {
    if (size >= target_) return true;
    if (size + std::popcount(cands) < target_) return false;
    int order[64];
    int colors[64];
    int m = color(cands, order, colors);
    Mask rest = cands;
    for (int i = m - 1; i >= 0; --i) {
      if (size + colors[i] < target_) return false;
      int v = order[i];
      rest &= ~bit(v);
      if (probe(rest & adj_[static_cast<std::size_t>(v)], size + 1)) return true;
    }
    return false;
  }

  // Greedy coloring; emits vertices class by class so color values ascend
  // with the emission index.
  int color(Mask cands, int* order, int* colors) const {
    int m = 0;
    int c = 0;
    Mask uncolored = cands;
    while (uncolored) {
      ++c;
      Mask avail = uncolored;
      while (avail) {
        int v = std::countr_zero(avail);
        uncolored &= ~bit(v);
        avail &= ~bit(v);
        avail &= ~adj_[static_cast<std::size_t>(v)];
        order[m] = v;
        colors[m] = c;
        ++m;
      }
    }
    return m;
  }

  const std::vector<Mask>& adj_;
  int n_;
  int best_ = 0;
  int target_ = 0;
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors_mask64(u);
  return adj;
}

std::vector<int> degeneracy_order(const std::vector<Mask>& adj, int n) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Mask remaining = full_mask(n);
  while (remaining) {
    int pick = -1;
    int pick_deg = n + 1;
    Mask scan = remaining;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int deg = std::popcount(adj[static_cast<std::size_t>(v)] & remaining);
      if (deg < pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    order.push_back(pick);
    remaining &= ~bit(pick);
  }
  return order;
}

// Maximum clique size using a degeneracy-reordered kernel, then the
// lexicographically smallest witness of that size reconstructed on the
// original labels through feasibility probes.
std::pair<int, VertexSet> max_clique_impl(const Graph& g, Mask prefix) {
  int n = g.vertex_count();
  if (n == 0) return {0, VertexSet(0)};
  std::vector<Mask> adj = adjacency_masks(g);

  Mask start_cands;
  int base;
  if (prefix == 0) {
    start_cands = full_mask(n);
    base = 0;
  } else {
    start_cands = full_mask(n);
    Mask scan = prefix;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      start_cands &= adj[static_cast<std::size_t>(v)];
    }
    base = std::popcount(prefix);
  }

  int best;
  {
    // Size phase in degeneracy order.
    std::vector<int> order = degeneracy_order(adj, n);
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<Mask> radj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      Mask m = adj[static_cast<std::size_t>(u)];
      Mask out = 0;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out |= bit(rank[static_cast<std::size_t>(v)]);
      }
      radj[static_cast<std::size_t>(rank[static_cast<std::size_t>(u)])] = out;
    }
    Mask rcands = 0;
    Mask scan = start_cands;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      rcands |= bit(rank[static_cast<std::size_t>(v)]);
    }
    CliqueKernel sizer(radj, n);
    best = sizer.max_size(rcands, base);
  }

  // Witness phase: extend the prefix in ascending label order, keeping only
  // choices that still complete to a clique of the maximum size.
  CliqueKernel prober(adj, n);
  Mask chosen = prefix;
  Mask cands = start_cands;
  int size = base;
  while (size < best) {
    Mask scan = cands;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      Mask next = cands & adj[static_cast<std::size_t>(v)] & above(v);
      if (prober.reachable(next, size + 1, best)) {
        chosen |= bit(v);
        cands = next;
        ++size;
        break;
      }
    }
  }
  return {best, VertexSet::from_mask(n, chosen)};
}

// ---------------------------------------------------------------------------
// General position branch and bound. between(u, v) collects the interior
// vertices of u,v-geodesics; a set is in general position iff no member lies
// in the between-mask of two other members.

class GpKernel {
 public:
  GpKernel(const Graph& g, const DistanceMatrix& d) : n_(g.vertex_count()) {
    between_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        if (!d.reachable(u, v)) continue;
        int duv = d(u, v);
        Mask m = 0;
        for (int w = 0; w < n_; ++w) {
          if (w == u || w == v) continue;
          if (d.reachable(u, w) && d.reachable(w, v) && d(u, w) + d(w, v) == duv)
            m |= bit(w);
        }
        between_at(u, v) = m;
        between_at(v, u) = m;
      }
  }

  // Largest general position set; when dual is set, largest one whose
  // complement is convex. forced pins a vertex into every candidate set.
  // Returns false iff no feasible set exists (possible only for forced dual).
  bool solve(bool dual, std::optional<int> forced, int& out_size,
             Mask& out_mask) {
    dual_ = dual;
    best_ = -1;
    best_mask_ = 0;
    Mask cur = 0;
    int size = 0;
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(n_));
    if (forced) {
      cur = bit(*forced);
      size = 1;
      for (int v = 0; v < n_; ++v)
        if (v != *forced) cands.push_back({v, between_at(*forced, v)});
    } else {
      for (int v = 0; v < n_; ++v) cands.push_back({v, 0});
    }
    dfs(cur, size, 0, cands);
    if (best_ < 0) return false;
    out_size = best_;
    out_mask = best_mask_;
    return true;
  }

 private:
  struct Cand {
    int v;
    Mask pair_block;  // vertices between v and some current member
  };

  Mask& between_at(int u, int v) {
    return between_[static_cast<std::size_t>(u) * n_ + v];
  }

  bool complement_convex(Mask cur) const {
    Mask comp = full_mask(n_) & ~cur;
    Mask scan_u = comp;
    while (scan_u) {
      int u = std::countr_zero(scan_u);
      scan_u &= scan_u - 1;
      Mask scan_v = comp & above(u);
      while (scan_v) {
        int v = std::countr_zero(scan_v);
        scan_v &= scan_v - 1;
        if (between_[static_cast<std::size_t>(u) * n_ + v] & cur) return false;
      }
    }
    return true;
  }

  void dfs(Mask cur, int size, Mask blocked, const std::vector<Cand>& cands) {
    if (size > best_ && (!dual_ || complement_convex(cur))) {
      best_ = size;
      best_mask_ = cur;
    }
    std::vector<Cand> next_cands;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (size + static_cast<int>(cands.size() - i) <= best_) break;
      const Cand& cand = cands[i];
      Mask nblocked = blocked | cand.pair_block;
      Mask ncur = cur | bit(cand.v);
      next_cands.clear();
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const Cand& c = cands[j];
        if (nblocked & bit(c.v)) continue;           // c interior to a member pair
        if (c.pair_block & bit(cand.v)) continue;    // new member interior to (s, c)
        Mask bvc = between_[static_cast<std::size_t>(cand.v) * n_ + c.v];
        if (bvc & ncur) continue;                    // a member interior to (v, c)
        next_cands.push_back({c.v, c.pair_block | bvc});
      }
      dfs(ncur, size + 1, nblocked, next_cands);
    }
  }

  int n_;
  std::vector<Mask> between_;
  bool dual_ = false;
  int best_ = -1;
  Mask best_mask_ = 0;
};

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& verts) {
  std::vector<int> to_sub(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i)
    to_sub[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const EdgeRef& e : g.edges())
    if (to_sub[static_cast<std::size_t>(e.u)] != -1 &&
        to_sub[static_cast<std::size_t>(e.v)] != -1)
      edges.emplace_back(to_sub[static_cast<std::size_t>(e.u)],
                         to_sub[static_cast<std::size_t>(e.v)]);
  return {build_graph(static_cast<int>(verts.size()), edges), verts};
}

std::vector<std::vector<int>> component_vertex_lists(const Graph& g) {
  std::vector<int> comp = connected_components(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(count));
  for (int v = 0; v < g.vertex_count(); ++v)
    lists[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  return lists;
}

SolveResult solve_outer_connected(const Graph& g) {
  Graph sr = strong_resolving_graph(g);
  auto [size, witness] = max_clique_impl(sr, 0);
  return SolveResult{PositionKind::Outer, size, witness, SolveMethod::SrgClique, 0};
}

SolveResult solve_connected(const Graph& g, PositionKind kind) {
  switch (kind) {
    case PositionKind::Total: {
      VertexSet s = simplicial_vertices(g);
      return SolveResult{kind, s.count(), s, SolveMethod::Simplicial, 0};
    }
    case PositionKind::Outer:
      return solve_outer_connected(g);
    case PositionKind::General:
    case PositionKind::Dual: {
      DistanceMatrix d = distance_matrix(g);
      GpKernel kernel(g, d);
      int size = 0;
      Mask mask = 0;
      kernel.solve(kind == PositionKind::Dual, std::nullopt, size, mask);
      return SolveResult{kind, size, VertexSet::from_mask(g.vertex_count(), mask),
                         SolveMethod::BranchBound, 0};
    }
  }
  throw BadParametersError("unknown position kind");
}

}  // namespace

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Simplicial: return "simplicial";
    case SolveMethod::SrgClique: return "srg_clique";
    case SolveMethod::BranchBound: return "branch_bound";
    case SolveMethod::BruteForce: return "brute_force";
  }
  return "?";
}

std::pair<int, VertexSet> max_clique(const Graph& g) {
  require_solver_size(g);
  return max_clique_impl(g, 0);
}

std::pair<int, VertexSet> independence_number(const Graph& g) {
  require_solver_size(g);
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return max_clique_impl(build_graph(n, edges), 0);
}

SolveResult max_position_set(const Graph& g, PositionKind kind) {
  require_solver_size(g);
  auto start = Clock::now();
  int n = g.vertex_count();
  if (n == 0) {
    SolveResult r{kind, 0, VertexSet(0),
                  kind == PositionKind::Total ? SolveMethod::Simplicial
                  : kind == PositionKind::Outer ? SolveMethod::SrgClique
                                                : SolveMethod::BranchBound,
                  0};
    return r;
  }

  SolveResult result;
  if (is_connected(g)) {
    result = solve_connected(g, kind);
  } else {
    // Pairs across components carry no geodesics, so General, Total and
    // Outer decompose into independent per-component problems.
    switch (kind) {
      case PositionKind::Dual:
        throw DisconnectedError("dual solve requires a connected graph");
      case PositionKind::Total: {
        VertexSet s = simplicial_vertices(g);
        result = SolveResult{kind, s.count(), s, SolveMethod::Simplicial, 0};
        break;
      }
      case PositionKind::General: {
        DistanceMatrix d = distance_matrix(g);
        GpKernel kernel(g, d);
        int size = 0;
        Mask mask = 0;
        kernel.solve(false, std::nullopt, size, mask);
        result = SolveResult{kind, size, VertexSet::from_mask(n, mask),
                             SolveMethod::BranchBound, 0};
        break;
      }
      case PositionKind::Outer: {
        VertexSet witness(n);
        int size = 0;
        for (const std::vector<int>& verts : component_vertex_lists(g)) {
          auto [sub, map] = induced_subgraph(g, verts);
          SolveResult part = solve_outer_connected(sub);
          size += part.size;
          for (int v : part.witness.to_vector())
            witness.insert(map[static_cast<std::size_t>(v)]);
        }
        result = SolveResult{kind, size, witness, SolveMethod::SrgClique, 0};
        break;
      }
    }
  }
  result.millis = elapsed_ms(start);
  return result;
}

std::optional<SolveResult> solve_forced(const Graph& g, PositionKind kind,
                                        int x) {
  require_solver_size(g);
  if (x < 0 || x >= g.vertex_count()) throw NoSuchVertexError("forced vertex not in graph");
  auto start = Clock::now();
  int n = g.vertex_count();

  std::optional<SolveResult> result;
  switch (kind) {
    case PositionKind::Total: {
      VertexSet s = simplicial_vertices(g);
      if (s.contains(x))
        result = SolveResult{kind, s.count(), s, SolveMethod::Simplicial, 0};
      break;
    }
    case PositionKind::Outer: {
      if (is_connected(g)) {
        Graph sr = strong_resolving_graph(g);
        auto [size, witness] = max_clique_impl(sr, bit(x));
        result = SolveResult{kind, size, witness, SolveMethod::SrgClique, 0};
      } else {
        // Forced clique in x's component, unforced optimum elsewhere.
        VertexSet witness(n);
        int size = 0;
        for (const std::vector<int>& verts : component_vertex_lists(g)) {
          auto [sub, map] = induced_subgraph(g, verts);
          bool has_x = std::find(verts.begin(), verts.end(), x) != verts.end();
          SolveResult part;
          if (has_x) {
            int sub_x = static_cast<int>(std::find(verts.begin(), verts.end(), x) -
                                         verts.begin());
            Graph sr = strong_resolving_graph(sub);
            auto [sz, wit] = max_clique_impl(sr, bit(sub_x));
            part = SolveResult{kind, sz, wit, SolveMethod::SrgClique, 0};
          } else {
            part = solve_outer_connected(sub);
          }
          size += part.size;
          for (int v : part.witness.to_vector())
            witness.insert(map[static_cast<std::size_t>(v)]);
        }
        result = SolveResult{kind, size, witness, SolveMethod::SrgClique, 0};
      }
      break;
    }
    case PositionKind::General:
    case PositionKind::Dual: {
      if (kind == PositionKind::Dual && !is_connected(g))
        throw DisconnectedError("dual solve requires a connected graph");
      DistanceMatrix d = distance_matrix(g);
      GpKernel kernel(g, d);
      int size = 0;
      Mask mask = 0;
      if (kernel.solve(kind == PositionKind::Dual, x, size, mask))
        result = SolveResult{kind, size, VertexSet::from_mask(n, mask),
                             SolveMethod::BranchBound, 0};
      break;
    }
  }
  if (result) result->millis = elapsed_ms(start);
  return result;
}

SolveResult brute_force_oracle(const Graph& g, PositionKind kind) {
  int n = g.vertex_count();
  if (n > kOracleMaxVertices)
    throw TooLargeError("brute force oracle is capped at 20 vertices");
  auto start = Clock::now();
  DistanceMatrix d = distance_matrix(g);
  for (int k = n; k >= 1; --k) {
    // k-subsets in lexicographic order.
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet z(n, comb);
      if (check_set(g, d, z, kind)) {
        SolveResult r{kind, k, z, SolveMethod::BruteForce, elapsed_ms(start)};
        return r;
      }
      int i = k - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return SolveResult{kind, 0, VertexSet(n), SolveMethod::BruteForce,
                     elapsed_ms(start)};
}

bool dual_zero_certificate(const Graph& g) {
  if (!is_connected(g))
    throw DisconnectedError("dual-zero certificate requires a connected graph");
  if (g.edge_count() == 0) return false;
  DistanceMatrix d = distance_matrix(g);
  for (const EdgeRef& e : g.edges()) {
    bool extended = false;
    for (int a : g.neighbors(e.u)) {
      if (a == e.v) continue;
      for (int b : g.neighbors(e.v)) {
        if (b == e.u || b == a) continue;
        if (d(a, b) == 3) {
          extended = true;
          break;
        }
      }
      if (extended) break;
    }
    if (!extended) return false;
  }
  return true;
}

}  // namespace genpos
