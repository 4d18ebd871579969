#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "symdepth/generators.hpp"
#include "symdepth/graph.hpp"
#include "symdepth/graph_io.hpp"
#include "symdepth/rng.hpp"

using namespace symdepth;

namespace {

// A perfect elimination ordering: each vertex's neighbors among the vertices
// after it in the order form a clique.
bool valid_peo(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  std::vector<int> pos(g.vertex_count());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    std::vector<int> later;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.has_edge(order[i], v) && pos[v] > i) later.push_back(v);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

bool valid_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 4) return false;
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool adjacent_on_cycle = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("construction and edges") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3).add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3).add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("vertex deletion relabels compactly") {
  Graph g = testutil::path_graph(5);
  auto del = delete_vertices(g, {1, 3});
  CHECK(del.graph.vertex_count() == 3);
  CHECK(del.graph.edge_count() == 0);
  CHECK(del.old_label == std::vector<int>{0, 2, 4});
  auto del2 = delete_vertices(g, {0});
  CHECK(del2.graph.edge_count() == 3);
  CHECK(del2.graph.has_edge(0, 1));  // old 1-2
  CHECK_THROWS_AS(delete_vertices(g, {5}), std::invalid_argument);
}

TEST_CASE("chordality with witnesses on fixed graphs") {
  CHECK(is_chordal(testutil::path_graph(6)).chordal);
  CHECK(is_chordal(testutil::complete_graph(5)).chordal);
  CHECK(is_chordal(Graph(3)).chordal);
  auto c5 = is_chordal(testutil::cycle_graph(5));
  CHECK(!c5.chordal);
  CHECK(valid_induced_cycle(testutil::cycle_graph(5), c5.induced_cycle));
}

TEST_CASE("chordality matches brute force on all graphs with n <= 5") {
  for (std::uint64_t code = 0; code < labeled_graph_count(5); ++code) {
    Graph g = labeled_graph(5, code);
    auto res = is_chordal(g);
    REQUIRE(res.chordal == testutil::brute_is_chordal(g));
    if (res.chordal)
      REQUIRE(valid_peo(g, res.elimination_order));
    else
      REQUIRE(valid_induced_cycle(g, res.induced_cycle));
  }
}

TEST_CASE("chordality witnesses on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = erdos_renyi(rng.uniform_int(1, 9), rng.uniform01(), rng);
    auto res = is_chordal(g);
    if (res.chordal)
      REQUIRE(valid_peo(g, res.elimination_order));
    else
      REQUIRE(valid_induced_cycle(g, res.induced_cycle));
  }
}

TEST_CASE("simplicial vertices of small graphs") {
  CHECK(simplicial_vertices(testutil::path_graph(3)) == std::vector<int>{0, 2});
  CHECK(simplicial_vertices(testutil::complete_graph(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(simplicial_vertices(testutil::cycle_graph(5)).empty());
}

TEST_CASE("minimal vertex covers match brute force") {
  CHECK(minimal_vertex_covers(testutil::path_graph(3)) ==
        std::vector<std::vector<int>>{{1}, {0, 2}});
  Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = erdos_renyi(rng.uniform_int(0, 7), rng.uniform01(), rng);
    REQUIRE(minimal_vertex_covers(g) == testutil::brute_minimal_covers(g));
  }
}

TEST_CASE("star packing value and witness") {
  auto p5 = star_packing_number(testutil::path_graph(5));
  CHECK(p5.value == 2);
  CHECK(p5.witness.centers == std::vector<int>{0, 3});
  auto c5 = star_packing_number(testutil::cycle_graph(5));
  CHECK(c5.value == 1);
  CHECK(c5.witness.centers == std::vector<int>{0});
  CHECK(star_packing_number(Graph(4)).value == 4);
  CHECK(star_packing_number(Graph(0)).value == 0);
}

TEST_CASE("star packing matches brute force with lex-least witness") {
  Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = erdos_renyi(rng.uniform_int(1, 9), rng.uniform01(), rng);
    auto res = star_packing_number(g);
    REQUIRE(res.value == testutil::brute_alpha2(g));
    REQUIRE(res.witness.centers == testutil::brute_alpha2_witness(g));
    REQUIRE(is_star_packing(g, res.witness));
  }
}

TEST_CASE("is_star_packing rejects overlaps") {
  Graph g = testutil::path_graph(4);
  CHECK(is_star_packing(g, StarPacking{{0, 3}}));
  CHECK(!is_star_packing(g, StarPacking{{0, 2}}));
  CHECK(!is_star_packing(g, StarPacking{{0, 0}}));
  CHECK_THROWS_AS(is_star_packing(g, StarPacking{{4}}), std::invalid_argument);
}

TEST_CASE("square graph joins vertices at distance <= 2") {
  Graph g = testutil::path_graph(5);
  Graph sq = square_graph(g);
  CHECK(sq.has_edge(0, 2));
  CHECK(!sq.has_edge(0, 3));
  CHECK(sq.has_edge(2, 4));
  CHECK(square_graph(Graph(3)).edge_count() == 0);
}

TEST_CASE("forest recognition") {
  CHECK(is_forest(testutil::path_graph(7)));
  CHECK(is_forest(Graph(5)));
  CHECK(!is_forest(testutil::cycle_graph(3)));
  CHECK(!is_forest(testutil::cycle_graph(6)));
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(is_forest(random_tree(rng.uniform_int(1, 10), rng)));
  }
}

TEST_CASE("graph io round trips both formats") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 3}});
  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(parse_graph("4 2\n0 1\n1 3\n") == g);
  CHECK(parse_graph("{\"n\":4,\"edges\":[[0,1],[1,3]]}") == g);
  CHECK_THROWS(parse_graph("4 1\n0 1\n0 2\n"));    // trailing input
  CHECK_THROWS(parse_graph("4 2\n0 1\n0 1\n"));    // duplicate edge
  CHECK_THROWS(parse_graph("4 1\n2 2\n"));         // self loop
  CHECK_THROWS(parse_graph("{\"n\":4}"));          // missing field
  CHECK_THROWS(parse_graph("{\"n\":70,\"edges\":[]}"));
}
