#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genpos/graph.hpp"
#include "genpos/position.hpp"

namespace genpos {

enum class Phase { Before, After };

/// A parametric construction together with the element whose removal the
/// family is designed to probe and the closed-form invariant values known
/// for it. Expected values are only present where a closed form exists.
struct FamilyInstance {
  std::string family;        // canonical family id, e.g. "Gn"
  std::vector<int> params;
  Graph graph;
  std::optional<int> distinguished_vertex;
  std::optional<EdgeRef> distinguished_edge;
  std::map<std::pair<PositionKind, Phase>, int> expected;

  std::optional<int> expected_value(PositionKind kind, Phase phase) const;
};

/// Canonical family ids accepted by make_family (aliases: "Y'n" for Ypn,
/// "Kn-e" for Kne).
///
///   Gn    two hubs with pendant leaves joined through a center and a path
///   Fn    fan: path plus a universal vertex
///   Wn    wheel: cycle plus a universal vertex
///   Mk    mushroom: wheel with a clique matched to consecutive rim vertices
///   Tk    double star: K_{1,2k} with an extra vertex over half the leaves
///   Yk    clique K_{k+3} with two extra vertices over the same k vertices
///   Gnk   clique K_n with an extra vertex over k vertices
///   Xn    two cliques joined by an edge plus a 2-path between them
///   Ypn   two cliques joined by an edge, shadowed by an adjacent pair
///   Zn    two copies of K_{2,n} joined by an edge between degree-n vertices
///   Hn    n triangles and a C_6 sharing one common edge
///   Kn, K1n, K2n, Pn, Cn, Kne   standard graphs
std::vector<std::string> family_names();

FamilyInstance make_family(const std::string& name, std::span<const int> params);
FamilyInstance make_family(const std::string& name,
                           std::initializer_list<int> params);

}  // namespace genpos
