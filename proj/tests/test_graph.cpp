#include <doctest.h>

#include <cmath>
#include <sstream>

#include "boxspace/errors.hpp"
#include "boxspace/graph.hpp"

using namespace boxspace;
using namespace boxspace::graph;

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  const Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.regularity().has_value());
}

TEST_CASE("Cayley graph of Z6 is C6") {
  const auto g = cayley_graph(6, 0, [](u32 a, u32 b) { return (a + b) % 6; }, {1, 5});
  CHECK(g.edges() == cycle(6).edges());
  CHECK_THROWS_AS(cayley_graph(6, 0, [](u32 a, u32 b) { return (a + b) % 6; }, {2, 4}), StructureError);
  CHECK_THROWS_AS(cayley_graph(6, 0, [](u32 a, u32 b) { return (a + b) % 6; }, {1}), ParameterError);
  CHECK_THROWS_AS(cayley_graph(6, 0, [](u32 a, u32 b) { return (a + b) % 6; }, {0, 1, 5}), ParameterError);
}

TEST_CASE("named graphs") {
  CHECK(petersen().regularity() == 3u);
  CHECK(petersen().edge_count() == 15);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(psl23_cayley().size() == 12);
  CHECK(psl23_cayley().regularity() == 3u);
  CHECK(is_connected(psl23_cayley()));
}

TEST_CASE("girth") {
  CHECK(girth(complete(4)) == 3u);
  CHECK(girth(petersen()) == 5u);
  CHECK(girth(cycle(7)) == 7u);
  CHECK(girth(complete_bipartite(3, 3)) == 4u);
  CHECK_FALSE(girth(path(5)).has_value());
}

TEST_CASE("bipartiteness and components") {
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  const Graph two(4, {{0, 1}, {2, 3}});
  CHECK(component_count(two) == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(bfs_distances(two, 0)[2] < 0);
}

TEST_CASE("exact Cheeger constants") {
  const auto c4 = cheeger_exact(cycle(4));
  CHECK(c4.exact);
  CHECK(c4.h == doctest::Approx(1.0));
  CHECK(cheeger_exact(complete(4)).h == doctest::Approx(2.0));
  CHECK(cheeger_exact(Graph(4, {{0, 1}, {2, 3}})).h == doctest::Approx(0.0));
  const auto big = cheeger_exact(cycle(40), 2 - 2 * std::cos(2 * M_PI / 40));
  CHECK_FALSE(big.exact);
  CHECK(big.lower <= big.upper);
}

TEST_CASE("spanning tree rank") {
  CHECK(spanning_tree(complete(4)).rank() == 3);
  CHECK(spanning_tree(petersen()).rank() == 6);
  CHECK(spanning_tree(cycle(5)).tree.size() == 4);
}

TEST_CASE("homology cover of a cycle unwinds it") {
  const auto c = homology_cover(cycle(5), 3);
  CHECK(c.r == 1);
  CHECK(c.graph.size() == 15);
  CHECK(c.graph.regularity() == 2u);
  CHECK(is_connected(c.graph));
  CHECK(girth(c.graph) == 15u);
}

TEST_CASE("homology cover of K4") {
  const auto c = homology_cover(complete(4), 2);
  CHECK(c.graph.size() == 32);
  CHECK(c.graph.edge_count() == 48);
  CHECK(c.graph.regularity() == 3u);
  CHECK(is_covering_map(c.graph, complete(4), c.projection));
  CHECK(deck_action_ok(c));
  const u32 v = c.vertex({1, 0, 1}, 2);
  CHECK(c.coordinates(v) == std::vector<u32>{1, 0, 1});
  CHECK(c.projection[v] == 2);
  CHECK(c.coordinates(c.translate(v, 0)) == std::vector<u32>{0, 0, 1});
}

TEST_CASE("cover girth does not drop") {
  const auto c = homology_cover(petersen(), 2);
  CHECK(girth(c.graph).value_or(1000) >= 5);
  CHECK(c.graph.size() == 640);
  CHECK_THROWS_AS(homology_cover(petersen(), 3, 1000), ResourceError);
}

TEST_CASE("covering check detects a bad projection") {
  const auto c = homology_cover(complete(4), 2);
  auto proj = c.projection;
  std::swap(proj[0], proj[1]);
  CHECK_FALSE(is_covering_map(c.graph, complete(4), proj));
}

TEST_CASE("edge-list round trip") {
  std::stringstream ss;
  write_edge_list(ss, petersen());
  const auto g = read_edge_list(ss);
  CHECK(g.edges() == petersen().edges());
  std::stringstream bad("3 2\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParameterError);
  std::stringstream cs;
  const auto c = homology_cover(complete(4), 2);
  write_cover(cs, c);
  const auto [g2, proj] = read_cover(cs);
  CHECK(g2.edges() == c.graph.edges());
  CHECK(proj == c.projection);
}
