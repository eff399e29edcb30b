#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "ncgraph/graph_export.hpp"
#include "ncgraph/simple_graph.hpp"
#include "testing_util.hpp"

using namespace ncg;

namespace {

SimpleGraph path(int m) {
  SimpleGraph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle(int m) {
  SimpleGraph g = path(m);
  g.add_edge(m - 1, 0);
  return g;
}

SimpleGraph clique(int m) {
  SimpleGraph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("edge bookkeeping") {
  SimpleGraph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 1));
  CHECK(g.degree(2) == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(2).to_vector() == std::vector<int>{0, 3});
  CHECK(g.closed_neighborhood(0).to_vector() == std::vector<int>{0, 2});

  g.remove_edge(0, 2);
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK_THROWS_AS(g.adjacent(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(SimpleGraph(-1), std::invalid_argument);
}

TEST_CASE("degree extremes") {
  const SimpleGraph g = path(4);
  CHECK(min_degree(g) == 1);
  CHECK(max_degree(g) == 2);
  CHECK_THROWS_AS(min_degree(SimpleGraph(0)), std::invalid_argument);
  CHECK_THROWS_AS(max_degree(SimpleGraph(0)), std::invalid_argument);
}

TEST_CASE("complement properties on seeded random graphs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const int m = 1 + i % 12;
    const SimpleGraph g = testing::random_graph(rng, m, 0.4);
    const SimpleGraph gc = complement(g);
    for (int u = 0; u < m; ++u) {
      CHECK(g.degree(u) + gc.degree(u) == m - 1);
      for (int v = u + 1; v < m; ++v) CHECK(g.adjacent(u, v) != gc.adjacent(u, v));
    }
    const SimpleGraph gcc = complement(gc);
    for (int u = 0; u < m; ++u) CHECK(gcc.neighbors(u) == g.neighbors(u));
    CHECK(g.edge_count() + gc.edge_count() == m * (m - 1) / 2);
  }
}

TEST_CASE("distance and diameter") {
  const SimpleGraph p4 = path(4);
  CHECK(distance(p4, 0, 3) == 3);
  CHECK(distance(p4, 0, 0) == 0);
  CHECK(distance(p4, 2, 0) == 2);
  CHECK(diameter(p4) == 3);

  SimpleGraph two(2);
  CHECK_FALSE(distance(two, 0, 1).has_value());
  CHECK_FALSE(diameter(two).has_value());
  CHECK_FALSE(is_connected(two));

  CHECK(diameter(SimpleGraph(1)) == 0);
  CHECK_FALSE(diameter(SimpleGraph(0)).has_value());
  CHECK(is_connected(SimpleGraph(0)));
  CHECK(is_connected(SimpleGraph(1)));
  CHECK(is_connected(cycle(5)));
  CHECK(diameter(cycle(5)) == 2);
  CHECK(diameter(clique(6)) == 1);

  CHECK_THROWS_AS(distance(p4, 0, 9), std::out_of_range);
}

TEST_CASE("component classification") {
  // K3 + P2 + 2 isolated, scattered over the index range.
  SimpleGraph g(7);
  g.add_edge(1, 4);
  g.add_edge(1, 6);
  g.add_edge(4, 6);
  g.add_edge(2, 5);

  const auto comps = components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].kind == ComponentKind::Isolated);
  CHECK(comps[0].vertices == std::vector<int>{0});
  CHECK(comps[1].kind == ComponentKind::Clique);
  CHECK(comps[1].size == 3);
  CHECK(comps[1].vertices == std::vector<int>{1, 4, 6});
  CHECK(comps[2].kind == ComponentKind::P2);
  CHECK(comps[2].vertices == std::vector<int>{2, 5});
  CHECK(comps[3].kind == ComponentKind::Isolated);
  CHECK(comps[3].vertices == std::vector<int>{3});

  CHECK(components(SimpleGraph(0)).empty());

  // Precedence: triangles are cliques, not cycles; C4 and C5 are cycles;
  // P3 is neither.
  CHECK(components(cycle(3))[0].kind == ComponentKind::Clique);
  CHECK(components(cycle(4))[0].kind == ComponentKind::Cycle);
  CHECK(components(cycle(5))[0].kind == ComponentKind::Cycle);
  CHECK(components(path(3))[0].kind == ComponentKind::Other);
  CHECK(components(clique(5))[0].kind == ComponentKind::Clique);
}

TEST_CASE("shape recognizers") {
  SimpleGraph g(7);
  g.add_edge(1, 4);
  g.add_edge(1, 6);
  g.add_edge(4, 6);
  CHECK(matches_clique_plus_isolated(g, 3, 4));
  CHECK_FALSE(matches_clique_plus_isolated(g, 3, 3));
  CHECK_FALSE(matches_clique_plus_isolated(g, 4, 4));
  g.add_edge(2, 5);
  CHECK_FALSE(matches_clique_plus_isolated(g, 3, 2));
  CHECK_THROWS_AS(matches_clique_plus_isolated(g, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(matches_clique_plus_isolated(g, 3, -1), std::invalid_argument);

  SimpleGraph m(7);
  m.add_edge(0, 3);
  m.add_edge(1, 5);
  m.add_edge(2, 6);
  const auto d = union_of_p2_and_isolated(m);
  REQUIRE(d.has_value());
  CHECK(d->p2_count == 3);
  CHECK(d->isolated_count == 1);
  m.add_edge(0, 1);
  CHECK_FALSE(union_of_p2_and_isolated(m).has_value());

  CHECK(is_single_cycle(cycle(3)));
  CHECK(is_single_cycle(cycle(4)));
  CHECK(is_single_cycle(cycle(9)));
  CHECK_FALSE(is_single_cycle(clique(4)));
  CHECK_FALSE(is_single_cycle(path(4)));
  SimpleGraph c4k1(5);
  c4k1.add_edge(0, 1);
  c4k1.add_edge(1, 2);
  c4k1.add_edge(2, 3);
  c4k1.add_edge(3, 0);
  CHECK_FALSE(is_single_cycle(c4k1));

  SimpleGraph star(4);
  for (int v = 1; v < 4; ++v) star.add_edge(0, v);
  CHECK(universal_vertex(star) == 0);
  CHECK_FALSE(universal_vertex(path(4)).has_value());
  CHECK(universal_vertex(clique(3)) == 0);
  CHECK(is_complete(clique(3)));
  CHECK_FALSE(is_complete(star));
  CHECK(is_complete(SimpleGraph(1)));
}

TEST_CASE("dot export is exact and escapes labels") {
  SimpleGraph g(3);
  g.add_edge(0, 2);
  const std::vector<std::string> labels = {"a", "b\"x", "c\\"};
  const std::string expected =
      "graph \"T\" {\n"
      "  \"a\";\n"
      "  \"b\\\"x\";\n"
      "  \"c\\\\\";\n"
      "  \"a\" -- \"c\\\\\";\n"
      "}\n";
  CHECK(to_dot(g, labels, "T") == expected);
  CHECK(to_dot(g, labels, "T") == to_dot(g, labels, "T"));
  CHECK_THROWS_AS(to_dot(g, {"a"}, "T"), std::invalid_argument);
}

TEST_CASE("json export round-trips") {
  SimpleGraph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  const std::vector<std::string> labels = {"e", "r", "s", "sr"};
  const auto doc = nlohmann::json::parse(to_json(g, labels));
  CHECK(doc["m"] == 4);
  CHECK(doc["labels"] == nlohmann::json(labels));
  const nlohmann::json expected_edges = {{0, 3}, {2, 3}};
  CHECK(doc["edges"] == expected_edges);
  CHECK_THROWS_AS(to_json(g, {}), std::invalid_argument);
}
