#include "genpos/position.hpp"

#include <algorithm>
#include <sstream>

namespace genpos {

const char* kind_name(PositionKind kind) {
  switch (kind) {
    case PositionKind::General: return "general";
    case PositionKind::Total: return "total";
    case PositionKind::Outer: return "outer";
    case PositionKind::Dual: return "dual";
  }
  return "?";
}

std::optional<PositionKind> kind_from_name(std::string_view name) {
  if (name == "general" || name == "gp") return PositionKind::General;
  if (name == "total" || name == "gpt") return PositionKind::Total;
  if (name == "outer" || name == "gpo") return PositionKind::Outer;
  if (name == "dual" || name == "gpd") return PositionKind::Dual;
  return std::nullopt;
}

bool z_positionable(const Graph& g, const DistanceMatrix& d, int x, int y,
                    const VertexSet& z) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw NoSuchVertexError("z_positionable endpoint outside vertex range");
  if (x == y) throw BadParametersError("z_positionable requires distinct endpoints");
  if (!d.reachable(x, y)) return true;
  int dxy = d(x, y);
  for (int w : z.to_vector()) {
    if (w == x || w == y) continue;
    if (d.reachable(x, w) && d.reachable(w, y) && d(x, w) + d(w, y) == dxy)
      return false;
  }
  return true;
}

namespace {

// Interior test with a reported witness; shared by the diagnostics paths.
std::optional<int> blocking_member(const DistanceMatrix& d, int x, int y,
                                   const std::vector<int>& z_members) {
  if (!d.reachable(x, y)) return std::nullopt;
  int dxy = d(x, y);
  for (int w : z_members) {
    if (w == x || w == y) continue;
    if (d.reachable(x, w) && d.reachable(w, y) && d(x, w) + d(w, y) == dxy)
      return w;
  }
  return std::nullopt;
}

}  // namespace

CheckDiagnostics check_set_diagnostics(const Graph& g, const DistanceMatrix& d,
                                       const VertexSet& z, PositionKind kind) {
  int n = g.vertex_count();
  std::vector<int> members = z.to_vector();
  if (!members.empty() && members.back() >= n)
    throw NoSuchVertexError("set member outside vertex range");

  CheckDiagnostics diag;
  diag.kind = kind;

  auto fail = [&](int u, int v, int w) {
    diag.holds = false;
    diag.witness = CheckDiagnostics::Witness{u, v, w};
  };

  auto check_pairs_within = [&](const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (auto w = blocking_member(d, verts[i], verts[j], members)) {
          fail(verts[i], verts[j], *w);
          return false;
        }
      }
    return true;
  };

  switch (kind) {
    case PositionKind::General:
      check_pairs_within(members);
      break;
    case PositionKind::Total: {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
      check_pairs_within(all);
      break;
    }
    case PositionKind::Outer: {
      if (!check_pairs_within(members)) break;
      for (int u : members) {
        for (int v = 0; v < n; ++v) {
          if (z.contains(v)) continue;
          if (auto w = blocking_member(d, u, v, members)) {
            fail(u, v, *w);
            break;
          }
        }
        if (!diag.holds) break;
      }
      break;
    }
    case PositionKind::Dual: {
      if (!check_pairs_within(members)) break;
      std::vector<int> outside;
      for (int v = 0; v < n; ++v)
        if (!z.contains(v)) outside.push_back(v);
      check_pairs_within(outside);
      break;
    }
  }
  return diag;
}

CheckDiagnostics check_set_diagnostics(const Graph& g, const VertexSet& z,
                                       PositionKind kind) {
  return check_set_diagnostics(g, distance_matrix(g), z, kind);
}

bool check_set(const Graph& g, const DistanceMatrix& d, const VertexSet& z,
               PositionKind kind) {
  return check_set_diagnostics(g, d, z, kind).holds;
}

bool check_set(const Graph& g, const VertexSet& z, PositionKind kind) {
  return check_set_diagnostics(g, distance_matrix(g), z, kind).holds;
}

VertexSet simplicial_vertices(const Graph& g) {
  int n = g.vertex_count();
  VertexSet out(n);
  for (int u = 0; u < n; ++u) {
    const std::vector<int>& nbrs = g.neighbors(u);
    bool simplicial = true;
    for (std::size_t i = 0; i < nbrs.size() && simplicial; ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!g.adjacent(nbrs[i], nbrs[j])) {
          simplicial = false;
          break;
        }
    if (simplicial) out.insert(u);
  }
  return out;
}

namespace {

bool maximally_distant_from(const Graph& g, const DistanceMatrix& d, int u,
                            int v) {
  int duv = d(u, v);
  for (int w : g.neighbors(u))
    if (d(v, w) > duv) return false;
  return true;
}

}  // namespace

bool is_mmd(const Graph& g, const DistanceMatrix& d, int u, int v) {
  if (u == v) throw BadParametersError("MMD requires distinct vertices");
  if (!d.reachable(u, v))
    throw DisconnectedError("MMD requires the pair to be connected");
  return maximally_distant_from(g, d, u, v) &&
         maximally_distant_from(g, d, v, u);
}

Graph strong_resolving_graph(const Graph& g) {
  if (!is_connected(g))
    throw DisconnectedError("strong resolving graph requires a connected graph");
  DistanceMatrix d = distance_matrix(g);
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (is_mmd(g, d, u, v)) edges.emplace_back(u, v);
  return build_graph(n, edges, g.name().empty() ? "" : g.name() + "_SR");
}

std::vector<std::pair<int, int>> true_twins(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;  // closed neighborhoods can only match for adjacent pairs
      bool same = g.degree(u) == g.degree(v);
      if (same) {
        for (int w = 0; w < n && same; ++w) {
          if (w == u || w == v) continue;
          if (g.adjacent(u, w) != g.adjacent(v, w)) same = false;
        }
      }
      if (same) out.emplace_back(u, v);
    }
  }
  return out;
}

GpValidation validate_gp_structure(const Graph& g, const DistanceMatrix& d,
                                   const VertexSet& x) {
  if (!is_connected(g))
    throw DisconnectedError("gp-structure validation requires a connected graph");
  GpValidation result;
  std::vector<int> members = x.to_vector();
  if (!members.empty() && members.back() >= g.vertex_count())
    throw NoSuchVertexError("set member outside vertex range");

  // Components of G[X].
  std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexSet> parts;
  for (int s : members) {
    if (part_of[s] != -1) continue;
    int id = static_cast<int>(parts.size());
    VertexSet part(g.vertex_count());
    std::vector<int> queue{s};
    part_of[s] = id;
    part.insert(s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.neighbors(queue[head]))
        if (x.contains(w) && part_of[w] == -1) {
          part_of[w] = id;
          part.insert(w);
          queue.push_back(w);
        }
    parts.push_back(std::move(part));
  }

  std::ostringstream why;
  for (const VertexSet& part : parts) {
    std::vector<int> verts = part.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!g.adjacent(verts[i], verts[j])) {
          why << "component {" << verts[i] << "," << verts[j]
              << ",...} is not complete";
          result.reason = why.str();
          return result;
        }
  }

  int t = static_cast<int>(parts.size());
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(t),
                                     std::vector<int>(static_cast<std::size_t>(t), -1));
  for (int i = 0; i < t; ++i) {
    std::vector<int> vi = parts[static_cast<std::size_t>(i)].to_vector();
    for (int j = i + 1; j < t; ++j) {
      std::vector<int> vj = parts[static_cast<std::size_t>(j)].to_vector();
      int p = -1;
      for (int a : vi)
        for (int b : vj) {
          int dab = d(a, b);
          if (p == -1) p = dab;
          if (dab != p) {
            why << "parts " << i << " and " << j << " are not distance-constant ("
                << a << "," << b << ")";
            result.reason = why.str();
            return result;
          }
        }
      dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
      dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = p;
    }
  }

  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < t; ++k) {
        if (i == j || j == k || i == k) continue;
        auto& di = dist[static_cast<std::size_t>(i)];
        auto& dj = dist[static_cast<std::size_t>(j)];
        if (di[static_cast<std::size_t>(k)] ==
            di[static_cast<std::size_t>(j)] + dj[static_cast<std::size_t>(k)]) {
          why << "parts (" << i << "," << j << "," << k << ") are transitive";
          result.reason = why.str();
          return result;
        }
      }

  result.ok = true;
  result.structure.cliques = std::move(parts);
  result.structure.part_distance = std::move(dist);
  return result;
}

GpValidation validate_gp_structure(const Graph& g, const VertexSet& x) {
  return validate_gp_structure(g, distance_matrix(g), x);
}

VertexSet simplicial_common_neighbors(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e)) throw NoSuchEdgeError("edge not in graph");
  VertexSet s = simplicial_vertices(g);
  VertexSet out(g.vertex_count());
  for (int w : s.to_vector())
    if (w != e.u && w != e.v && g.adjacent(w, e.u) && g.adjacent(w, e.v))
      out.insert(w);
  return out;
}

EdgePartition edge_partition(const Graph& g, const VertexSet& x, EdgeRef e) {
  if (!g.has_edge(e)) throw NoSuchEdgeError("edge not in graph");
  DistanceMatrix d = distance_matrix(g);
  if (!check_set(g, d, x, PositionKind::General))
    throw NotGeneralPositionError("edge_partition requires a general position set");
  EdgePartition out{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
  for (int w : x.to_vector()) {
    int du = d(e.u, w);
    int dv = d(e.v, w);
    if (du <= dv) out.near_u.insert(w);
    if (dv <= du) out.near_v.insert(w);
  }
  return out;
}

}  // namespace genpos
