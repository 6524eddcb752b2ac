#include <doctest.h>

#include <random>
#include <set>

#include "critgen/canon.hpp"
#include "critgen/graph6.hpp"
#include "oracles.hpp"

using namespace critgen;

TEST_CASE("isomorphic relabelings share a form") {
  const Graph c5 = cycle(5);
  const Graph c5_star = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_form(c5) == canonical_form(c5_star));
  CHECK(canonical_form(path(4)) != canonical_form(complete_bipartite(1, 3)));
}

TEST_CASE("are_isomorphic") {
  CHECK(are_isomorphic(cycle(5), complement(cycle(5))));
  const Graph claw_p1 = disjoint_union(complete_bipartite(1, 3), Graph(1));
  const Graph p4_p1 = disjoint_union(path(4), Graph(1));
  CHECK_FALSE(are_isomorphic(claw_p1, p4_p1));
  CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  CHECK(are_isomorphic(Graph(0), Graph(0)));
}

TEST_CASE("distinct forms on all 4-vertex graphs") {
  // 64 labeled graphs, 11 classes. Check both directions against the oracle.
  std::vector<Graph> all;
  oracle::for_each_labeled_graph(4, [&](const Graph& g) { all.push_back(g); });
  REQUIRE(all.size() == 64);
  std::set<CanonicalForm> forms;
  for (std::size_t i = 0; i < all.size(); ++i) {
    forms.insert(canonical_form(all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK((canonical_form(all[i]) == canonical_form(all[j])) == oracle::isomorphic(all[i], all[j]));
    }
  }
  CHECK(forms.size() == 11);
}

TEST_CASE("class counts for n = 1..6") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalForm> forms;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) { forms.insert(canonical_form(g)); });
    CHECK(forms.size() == expected[n - 1]);
  }
  // The pairwise oracle agrees on the smaller orders.
  for (int n = 1; n <= 5; ++n) CHECK(oracle::count_isomorphism_classes(n) == expected[n - 1]);
}

TEST_CASE("permutation invariance and decode fixed point") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(0, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const CanonicalForm form = canonical_form(g);
    const Graph shuffled = relabel(g, oracle::random_permutation(rng, g.order()));
    REQUIRE(canonical_form(shuffled) == form);
    const Graph decoded = form.decode();
    CHECK(oracle::isomorphic(decoded, g));
    CHECK(canonical_form(decoded) == form);
    CHECK(form.order() == g.order());
  }
}

TEST_CASE("highly symmetric graphs") {
  // Twin classes and vertex-transitive graphs stress the automorphism pruning.
  std::mt19937_64 rng(5);
  const std::vector<Graph> graphs{
      Graph(30),
      complete(30),
      complete_bipartite(12, 14),
      multiple(cycle(5), 6),
      complement(cycle(23)),
      multiple(complete(4), 8),
      join(multiple(cycle(5), 3), complement(cycle(9))),
  };
  for (const Graph& g : graphs) {
    const CanonicalForm form = canonical_form(g);
    for (int t = 0; t < 5; ++t) {
      CHECK(canonical_form(relabel(g, oracle::random_permutation(rng, g.order()))) == form);
    }
  }
  // Same degree sequence, different structure.
  CHECK(canonical_form(multiple(cycle(5), 6)) != canonical_form(multiple(cycle(6), 5)));
  CHECK(canonical_form(cycle(10)) != canonical_form(multiple(cycle(5), 2)));
}

TEST_CASE("canonical ordering puts smaller orders first") {
  CHECK(canonical_less(canonical_form(complete(5)), canonical_form(Graph(6))));
  CHECK_FALSE(canonical_less(canonical_form(Graph(6)), canonical_form(complete(5))));
}
