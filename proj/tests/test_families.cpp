#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "genpos/families.hpp"
#include "genpos/metric.hpp"
#include "genpos/position.hpp"

using namespace genpos;

namespace {

int order_of(const std::string& family, std::initializer_list<int> params) {
  return make_family(family, params).graph.vertex_count();
}

}  // namespace

TEST_CASE("family orders match the constructions") {
  for (int n : {2, 3, 4, 5}) CHECK(order_of("Gn", {n}) == 4 * n + 6);
  for (int k : {4, 5, 6}) CHECK(order_of("Mk", {k}) == 2 * k + 5);
  for (int k : {3, 4, 5}) CHECK(order_of("Tk", {k}) == 2 * k + 2);
  for (int k : {2, 3, 4}) CHECK(order_of("Yk", {k}) == k + 5);
  for (int n : {1, 2, 3}) CHECK(order_of("Hn", {n}) == n + 6);
  for (int n : {4, 5}) CHECK(order_of("Xn", {n}) == 2 * n + 1);
  for (int n : {3, 4}) CHECK(order_of("Ypn", {n}) == 2 * n + 2);
  for (int n : {2, 3}) CHECK(order_of("Zn", {n}) == 2 * n + 4);
  CHECK(order_of("Fn", {4}) == 5);
  CHECK(order_of("Wn", {5}) == 6);
  CHECK(order_of("Gnk", {5, 2}) == 6);
}

TEST_CASE("family instances are connected and carry their elements") {
  for (const auto& [family, params] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"Gn", {3}}, {"Fn", {5}}, {"Wn", {6}}, {"Mk", {4}}, {"Tk", {3}},
           {"Yk", {2}}, {"Gnk", {5, 2}}, {"Xn", {4}}, {"Ypn", {3}},
           {"Zn", {2}}, {"Hn", {2}}, {"Kn", {4}}, {"K1n", {3}}, {"K2n", {3}},
           {"Pn", {5}}, {"Cn", {6}}, {"Kne", {5}}}) {
    FamilyInstance f = make_family(family, params);
    CHECK(is_connected(f.graph));
    CHECK((f.distinguished_vertex.has_value() || f.distinguished_edge.has_value() ||
           family == "Pn" || family == "Cn"));
    if (f.distinguished_vertex)
      CHECK(*f.distinguished_vertex < f.graph.vertex_count());
    if (f.distinguished_edge) CHECK(f.graph.has_edge(*f.distinguished_edge));
  }
}

TEST_CASE("distinguished vertices are non-cut where the bounds need them") {
  for (const auto& [family, params] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"Gn", {2}}, {"Gn", {4}}, {"Fn", {5}}, {"Mk", {4}}, {"Mk", {5}},
           {"Tk", {3}}, {"Yk", {3}}, {"Gnk", {7, 3}}}) {
    FamilyInstance f = make_family(family, params);
    REQUIRE(f.distinguished_vertex.has_value());
    CHECK_FALSE(cut_vertices(f.graph).contains(*f.distinguished_vertex));
  }
}

TEST_CASE("structure spot checks") {
  SUBCASE("mushroom M4 matches its picture") {
    FamilyInstance m4 = make_family("Mk", {4});
    const Graph& g = m4.graph;
    CHECK(g.vertex_count() == 13);
    int x = 8;  // wheel center
    CHECK(*m4.distinguished_vertex == x);
    for (int w = 0; w < 8; ++w) CHECK(g.adjacent(x, w));   // spokes
    for (int w = 0; w < 8; ++w) CHECK(g.adjacent(w, (w + 1) % 8));  // rim
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(g.adjacent(9 + i, 9 + j));  // clique
    for (int i = 0; i < 4; ++i) CHECK(g.adjacent(9 + i, i));  // matching
    CHECK(g.edge_count() == 8 + 8 + 6 + 4);
  }
  SUBCASE("G2 has simplicial count 4") {
    CHECK(simplicial_vertices(make_family("Gn", {2}).graph).count() == 4);
  }
  SUBCASE("fan hub degree") {
    FamilyInstance f4 = make_family("Fn", {4});
    CHECK(f4.graph.degree(*f4.distinguished_vertex) == 4);
  }
  SUBCASE("H3 layout") {
    FamilyInstance h3 = make_family("Hn", {3});
    const Graph& g = h3.graph;
    CHECK(g.vertex_count() == 9);
    CHECK(g.adjacent(0, 1));                    // shared edge xy
    for (int w : {2, 3, 4}) {
      CHECK(g.adjacent(0, w));
      CHECK(g.adjacent(1, w));
    }
    CHECK(g.adjacent(0, 5));                    // x - v1
    CHECK(g.adjacent(5, 6));
    CHECK(g.adjacent(6, 7));
    CHECK(g.adjacent(7, 8));
    CHECK(g.adjacent(8, 1));                    // v4 - y
    CHECK(g.degree(0) == 5);
  }
  SUBCASE("Tk apex covers exactly half the leaves") {
    FamilyInstance t4 = make_family("Tk", {4});
    CHECK(t4.graph.degree(*t4.distinguished_vertex) == 4);
    CHECK(t4.graph.degree(0) == 8);  // star center
  }
  SUBCASE("Zn bridge joins the degree-n vertices") {
    FamilyInstance z3 = make_family("Zn", {3});
    EdgeRef e = *z3.distinguished_edge;
    CHECK(z3.graph.degree(e.u) == 4);  // 3 + the bridge
    CHECK(z3.graph.degree(e.v) == 4);
  }
}

TEST_CASE("expected value tables") {
  FamilyInstance g3 = make_family("Gn", {3});
  CHECK(g3.expected_value(PositionKind::Total, Phase::Before) == 6);
  CHECK(g3.expected_value(PositionKind::Outer, Phase::After) == 12);
  CHECK(g3.expected_value(PositionKind::General, Phase::Before) == 7);

  FamilyInstance f7 = make_family("Fn", {7});
  CHECK(f7.expected_value(PositionKind::Outer, Phase::Before) == 4);   // ceil(7/2)
  CHECK(f7.expected_value(PositionKind::Dual, Phase::Before) == 6);    // ceil(16/3)
  CHECK(f7.expected_value(PositionKind::Dual, Phase::After) == 2);

  FamilyInstance f3 = make_family("Fn", {3});
  CHECK_FALSE(f3.expected_value(PositionKind::Dual, Phase::Before).has_value());

  CHECK(make_family("Yk", {4}).expected_value(PositionKind::Dual, Phase::After) == 7);
  CHECK(make_family("Xn", {5}).expected_value(PositionKind::Total, Phase::Before) == 6);
  CHECK(make_family("K2n", {4}).expected_value(PositionKind::Total, Phase::Before) == 0);
  CHECK(make_family("Kne", {6}).expected_value(PositionKind::Total, Phase::After) == 5);
  CHECK(make_family("Gnk", {7, 3}).expected_value(PositionKind::Outer, Phase::Before) == 5);
}

TEST_CASE("family aliases and parameter validation") {
  CHECK(make_family("Y'n", {3}).family == "Ypn");
  CHECK(make_family("Kn-e", {5}).family == "Kne");
  CHECK(make_family("mk", {4}).family == "Mk");

  CHECK_THROWS_AS(make_family("Mk", {3}), BadParametersError);
  CHECK_THROWS_AS(make_family("Yk", {1}), BadParametersError);
  CHECK_THROWS_AS(make_family("Tk", {2}), BadParametersError);
  CHECK_THROWS_AS(make_family("Gn", {1}), BadParametersError);
  CHECK_THROWS_AS(make_family("Gnk", {5, 3}), BadParametersError);
  CHECK_THROWS_AS(make_family("Gnk", {5, 0}), BadParametersError);
  CHECK_THROWS_AS(make_family("Xn", {3}), BadParametersError);
  CHECK_THROWS_AS(make_family("Ypn", {2}), BadParametersError);
  CHECK_THROWS_AS(make_family("Zn", {1}), BadParametersError);
  CHECK_THROWS_AS(make_family("Hn", {0}), BadParametersError);
  CHECK_THROWS_AS(make_family("Cn", {2}), BadParametersError);
  CHECK_THROWS_AS(make_family("Kne", {2}), BadParametersError);
  CHECK_THROWS_AS(make_family("nope", {1}), BadParametersError);
  CHECK_THROWS_AS(make_family("Gnk", {5}), BadParametersError);
}

TEST_CASE("standard family shapes") {
  CHECK(make_family("Pn", {5}).graph.edge_count() == 4);
  CHECK(make_family("Cn", {6}).graph.edge_count() == 6);
  CHECK(make_family("Kn", {5}).graph.edge_count() == 10);
  CHECK(make_family("K1n", {4}).graph.degree(0) == 4);
  CHECK(make_family("K2n", {3}).graph.degree(0) == 3);
  CHECK(make_family("Kne", {5}).graph.edge_count() == 9);
  CHECK_FALSE(make_family("Kne", {5}).graph.adjacent(0, 1));
}
