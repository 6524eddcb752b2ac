#include <doctest.h>

#include <random>

#include "critgen/graph.hpp"
#include "oracles.hpp"

using namespace critgen;

namespace {

bool well_formed(const Graph& g) {
  for (int i = 0; i < g.order(); ++i) {
    if ((g.row(i) >> i) & 1U) return false;
    if (!VertexSet(g.row(i)).is_subset_of(g.vertices())) return false;
    for (int j = 0; j < g.order(); ++j) {
      if (g.has_edge(i, j) != g.has_edge(j, i)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("path") {
  CHECK(path(1).order() == 1);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(2).edges() == std::vector<std::pair<int, int>>{{0, 1}});
  const Graph p5 = path(5);
  CHECK(p5.order() == 5);
  CHECK(p5.edge_count() == 4);
  int leaves = 0;
  for (int v = 0; v < 5; ++v) leaves += p5.degree(v) == 1;
  CHECK(leaves == 2);
  CHECK_THROWS_AS(path(0), InvalidParameter);
}

TEST_CASE("cycle, complete and complete bipartite") {
  const Graph c5 = cycle(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete(0).order() == 0);
  const Graph star = complete_bipartite(1, 4);
  CHECK(star.edge_count() == 4);
  CHECK(star.degree(0) == 4);
  CHECK_THROWS_AS(cycle(2), InvalidParameter);
  CHECK_THROWS_AS(complete_bipartite(0, 3), InvalidParameter);
  CHECK_THROWS_AS(complete(65), InvalidParameter);
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)).edge_count() == 0);
  const Graph c5 = cycle(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(oracle::isomorphic(complement(c5), c5));
}

TEST_CASE("disjoint union") {
  const Graph claw_p1 = disjoint_union(complete_bipartite(1, 3), path(1));
  CHECK(claw_p1.order() == 5);
  CHECK(claw_p1.edge_count() == 3);
  CHECK(claw_p1.degree(4) == 0);
  const Graph co = complement(disjoint_union(complete(3), multiple(path(1), 2)));
  CHECK(co.order() == 5);
  CHECK(co.edge_count() == 7);
  CHECK(disjoint_union(cycle(5), Graph(0)) == cycle(5));
  CHECK_THROWS_AS(disjoint_union(complete(40), complete(30)), InvalidParameter);
}

TEST_CASE("induced subgraph") {
  CHECK(induced_subgraph(cycle(5), VertexSet{0, 1, 2}) == path(3));
  const Graph g = cycle(7);
  CHECK(induced_subgraph(g, g.vertices()) == g);
  CHECK(induced_subgraph(complete(5), VertexSet{0, 2, 4}) == complete(3));
  CHECK_THROWS_AS(induced_subgraph(cycle(5), VertexSet{5}), InvalidParameter);
}

TEST_CASE("vertex and edge deletion, vertex addition") {
  CHECK(delete_vertex(complete(5), 0) == complete(4));
  CHECK(add_vertex_with_neighborhood(path(4), VertexSet{0, 3}) == cycle(5));
  const Graph p3 = delete_edge(complete(3), 0, 1);
  CHECK(oracle::isomorphic(p3, path(3)));
  CHECK_THROWS_AS(delete_edge(path(3), 0, 2), InvalidParameter);
  CHECK_THROWS_AS(delete_vertex(path(3), 3), InvalidParameter);
  CHECK_THROWS_AS(add_vertex_with_neighborhood(path(3), VertexSet{3}), InvalidParameter);
  CHECK_THROWS_AS(add_vertex_with_neighborhood(complete(64), VertexSet{}), InvalidParameter);
}

TEST_CASE("neighborhood, degree, connectivity") {
  CHECK(neighborhood(cycle(5), 0) == VertexSet{1, 4});
  CHECK_FALSE(is_connected(multiple(path(1), 2)));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(cycle(6)));
  CHECK(degree(complete_bipartite(1, 4), 0) == 4);
  CHECK_THROWS_AS(degree(cycle(5), 7), InvalidParameter);
}

TEST_CASE("from_rows rejects malformed adjacency") {
  const std::vector<std::uint64_t> asymmetric{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(asymmetric), InvalidParameter);
  const std::vector<std::uint64_t> loop{0b01};
  CHECK_THROWS_AS(Graph::from_rows(loop), InvalidParameter);
  const std::vector<std::uint64_t> stray{0b100, 0};
  CHECK_THROWS_AS(Graph::from_rows(stray), InvalidParameter);
}

TEST_CASE("random graphs: well-formedness, complement edge count, add/delete inverse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(0, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = order(rng);
    const Graph g = oracle::random_graph(rng, n, density(rng));
    const Graph co = complement(g);
    REQUIRE(well_formed(g));
    REQUIRE(well_formed(co));
    CHECK(co.edge_count() == n * (n - 1) / 2 - g.edge_count());
    CHECK(complement(co) == g);
    CHECK(disjoint_union(g, co).order() == 2 * n);
    CHECK(induced_subgraph(g, g.vertices()) == g);
    const VertexSet nbrs(rng() & g.vertices().bits());
    const Graph grown = add_vertex_with_neighborhood(g, nbrs);
    REQUIRE(well_formed(grown));
    CHECK(grown.neighbors(n) == nbrs);
    CHECK(delete_vertex(grown, n) == g);
    const auto perm = oracle::random_permutation(rng, n);
    CHECK(oracle::isomorphic(relabel(g, perm), g));
  }
}
