#include <doctest.h>

#include <set>

#include "catalog.hpp"
#include "critgen/critical.hpp"
#include "critgen/enumerate.hpp"
#include "critgen/graph6.hpp"

using namespace critgen;

namespace {

std::vector<Pattern> family_for(const char* h) { return {parse_pattern("p5"), parse_pattern(h)}; }

SearchConfig seeded(const char* h, int max_order) {
  SearchConfig cfg;
  cfg.k = 5;
  cfg.family = family_for(h);
  cfg.max_order = max_order;
  cfg.seeds = antihole_seeds();
  return cfg;
}

std::set<CanonicalForm> forms(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g));
  return out;
}

std::string as_text(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) out += encode_graph6(g) + "\n";
  return out;
}

}  // namespace

TEST_CASE("one-vertex extensions") {
  CHECK(one_vertex_extensions(Graph(1)).size() == 2);
  const auto from_k2 = one_vertex_extensions(complete(2));
  CHECK(from_k2.size() == 4);
  CHECK(forms(from_k2).size() == 3);  // K3, P3, K2+K1
  CHECK(one_vertex_extensions(cycle(5)).size() == 32);
  for (const Graph& e : one_vertex_extensions(path(3))) {
    CHECK(e.order() == 4);
    CHECK(induced_subgraph(e, VertexSet::range(3)) == path(3));
  }
  CHECK_THROWS_AS(one_vertex_extensions(Graph(25)), InvalidParameter);
}

TEST_CASE("obligations") {
  const auto pair = ExpansionObligation::comparable(0, 2);
  CHECK(pair.admits(VertexSet{0}));
  CHECK(pair.admits(VertexSet{0, 1}));
  CHECK_FALSE(pair.admits(VertexSet{0, 2}));
  CHECK_FALSE(pair.admits(VertexSet{1, 2}));
  CHECK_FALSE(pair.admits(VertexSet{}));
  const ExpansionObligation touch_only{VertexSet{0, 1}, {}};
  CHECK(touch_only.admits(VertexSet{1}));
  CHECK_FALSE(touch_only.admits(VertexSet{2}));

  // P4 has comparable ends-vs-inner pairs; C5 has none and is connected.
  const auto p4 = choose_obligation(path(4), {});
  REQUIRE(p4);
  CHECK(p4->touch.size() == 1);
  CHECK(p4->miss.size() == 1);
  CHECK(is_xy_obstruction(path(4), p4->touch, p4->miss));
  const auto c5 = choose_obligation(cycle(5), {});
  REQUIRE(c5);
  CHECK(c5->touch == cycle(5).vertices());
  CHECK(c5->miss.empty());
  CHECK_FALSE(choose_obligation(cycle(5), PruningFlags::none()));

  // Components: K2 + K2 has X = one edge, Y = the other.
  const auto two_edges = choose_obligation(multiple(complete(2), 2), {false, true, false, false});
  REQUIRE(two_edges);
  CHECK(is_xy_obstruction(multiple(complete(2), 2), two_edges->touch, two_edges->miss));

  const Graph p4_plus = add_vertex_with_neighborhood(path(4), VertexSet{1});
  CHECK_FALSE(pruning_allows(p4_plus, ExpansionObligation::comparable(0, 2)));
  CHECK(pruning_allows(p4_plus, ExpansionObligation::comparable(1, 3)));
  CHECK(pruning_allows(p4_plus, std::nullopt));
}

TEST_CASE("module splits") {
  const PruningFlags only{false, false, false, true, 1};
  // 2K2 under a dominating vertex is a module that stays 2-chromatic minus any vertex.
  const Graph g = join(complete(1), multiple(complete(2), 2));
  const auto found = candidate_obligations(g, only);
  REQUIRE(found.size() == 1);
  CHECK(found[0].touch == found[0].miss);
  CHECK(found[0].touch.size() == 4);
  CHECK_FALSE(found[0].touch.contains(0));
  // Cliques and the modules of a prime graph are all critical.
  CHECK(candidate_obligations(complete(5), only).empty());
  CHECK(candidate_obligations(cycle(5), only).empty());
  // A split obligation admits exactly the neighbourhoods meeting M partially.
  CHECK(found[0].admits(VertexSet{1}));
  CHECK_FALSE(found[0].admits(VertexSet{1, 2, 3, 4}));
  CHECK_FALSE(found[0].admits(VertexSet{0}));
}

TEST_CASE("every obligation chosen on small graphs is an obstruction") {
  const auto all = catalog::all_graphs(6);
  for (const auto& [n, graphs] : all) {
    for (const Graph& g : graphs) {
      const auto o = choose_obligation(g, {true, true, false, false});
      if (o) CHECK(is_xy_obstruction(g, o->touch, o->miss));
    }
  }
}

TEST_CASE("K5 seed is output immediately") {
  SearchConfig cfg;
  cfg.k = 5;
  cfg.family = family_for("k1,3+p1");
  cfg.max_order = 8;
  cfg.seeds = {complete(5)};
  const auto r = enumerate(cfg);
  REQUIRE(r.graphs.size() == 1);
  CHECK(are_isomorphic(r.graphs[0], complete(5)));
  CHECK(r.complete);
  CHECK(r.nodes_visited == 1);
}

TEST_CASE("forbidden seed is rejected") {
  SearchConfig cfg;
  cfg.family = family_for("k1,3+p1");
  cfg.seeds = {path(5)};
  CHECK_THROWS_AS(enumerate(cfg), InvalidParameter);
  cfg.seeds = {complement(cycle(5))};
  cfg.max_order = 0;
  CHECK_THROWS_AS(enumerate(cfg), InvalidParameter);
}

TEST_CASE("depth-first and level engines agree") {
  for (const char* h : {"k1,3+p1", "co(k3+2p1)"}) {
    const SearchConfig cfg = seeded(h, 9);
    const auto level = enumerate(cfg);
    SeenSet seen;
    std::vector<Graph> dfs;
    std::uint64_t nodes = 0;
    bool complete = true;
    for (const Graph& seed : cfg.seeds) {
      const auto r = recursively_enumerate(cfg, seed, seen, nullptr);
      dfs.insert(dfs.end(), r.graphs.begin(), r.graphs.end());
      nodes += r.nodes_visited;
      complete = complete && r.complete;
    }
    CHECK(as_text(canonical_sorted(dfs)) == as_text(level.graphs));
    CHECK(nodes == level.nodes_visited);
    CHECK(seen.size() == nodes);
    CHECK(complete == level.complete);
  }
}

TEST_CASE("pruning does not change the output") {
  for (const char* h : {"k1,3+p1", "k1,4+p1", "co(k3+2p1)"}) {
    SearchConfig cfg = seeded(h, 9);
    const auto pruned = enumerate(cfg);
    cfg.pruning = PruningFlags::none();
    const auto plain = enumerate(cfg);
    CHECK(as_text(pruned.graphs) == as_text(plain.graphs));
    CHECK(pruned.nodes_visited < plain.nodes_visited);
  }
}

TEST_CASE("output is deterministic and independent of worker count") {
  SearchConfig cfg = seeded("k1,4+p1", 9);
  const std::string once = as_text(enumerate(cfg).graphs);
  CHECK(as_text(enumerate(cfg).graphs) == once);
  cfg.jobs = 3;
  CHECK(as_text(enumerate(cfg).graphs) == once);
}

TEST_CASE("every output is critical, free and distinct") {
  for (const char* h : {"k1,3+p1", "co(k3+2p1)"}) {
    const auto r = enumerate_5vc(parse_pattern(h), 9);
    const auto family = family_for(h);
    CHECK(forms(r.graphs).size() == r.graphs.size());
    std::size_t total = 0;
    for (const auto& [n, count] : r.per_order_counts) total += count;
    CHECK(total == r.graphs.size());
    for (const Graph& g : r.graphs) {
      CHECK(is_k_vertex_critical(g, 5).is_vertex_critical);
      CHECK(is_family_free(g, family));
      CHECK_FALSE(find_comparable_pair(g));
      CHECK_FALSE(find_xy_obstruction(g, 2));
    }
  }
}

TEST_CASE("capped search is complete against brute force up to 8 vertices") {
  const auto all = catalog::all_graphs(8);
  const Graph c5bar = complement(cycle(5));
  const Graph c7bar = complement(cycle(7));
  for (const char* h : {"k1,3+p1", "k1,4+p1", "co(k3+2p1)"}) {
    const auto family = family_for(h);
    std::vector<Graph> expected;
    for (const auto& [n, graphs] : all) {
      for (const Graph& g : graphs) {
        if (n < 5 || !is_family_free(g, family) || !is_k_vertex_critical(g, 5).is_vertex_critical) continue;
        if (find_induced(g, c5bar) || find_induced(g, c7bar)) expected.push_back(g);
      }
    }
    SearchConfig cfg = seeded(h, 8);
    const auto r = enumerate(cfg);
    CHECK(as_text(r.graphs) == as_text(canonical_sorted(expected)));
  }
}

TEST_CASE("truncation is reported") {
  const auto r = enumerate(seeded("k1,3+p1", 8));
  CHECK_FALSE(r.complete);
  CHECK(r.per_order_counts.at(8) == 7);
}

TEST_CASE("enumerate_5vc adds the sporadic graphs") {
  const auto r = enumerate_5vc(parse_pattern("k1,3+p1"), 7);
  CHECK(r.per_order_counts.at(5) == 1);
  CHECK(r.per_order_counts.at(7) == 1);
  CHECK_FALSE(r.per_order_counts.contains(6));
  // The complement of C9 contains K3 + 2P1's complement, so it is absent there.
  const auto co = enumerate_5vc(parse_pattern("co(k3+2p1)"), 9);
  bool has_c9bar = false;
  for (const Graph& g : co.graphs) has_c9bar = has_c9bar || are_isomorphic(g, complement(cycle(9)));
  CHECK(has_c9bar == is_family_free(complement(cycle(9)), family_for("co(k3+2p1)")));
}

TEST_CASE("named classes") {
  CHECK(classify_family(family_for("k1,3+p1")) == NamedClass::kClawPlusP1);
  const std::vector<Pattern> swapped{parse_pattern("p1+k1,4"), parse_pattern("p5")};
  CHECK(classify_family(swapped) == NamedClass::kK14PlusP1);
  CHECK(classify_family(family_for("co(2p1+k3)")) == NamedClass::kCoK3Plus2P1);
  CHECK_FALSE(classify_family(family_for("k1,3")));
  CHECK_FALSE(classify_family(std::vector<Pattern>{parse_pattern("p5")}));
  CHECK(default_max_order(NamedClass::kClawPlusP1) == 13);
  CHECK(default_max_order(NamedClass::kK14PlusP1) == 17);
  CHECK(default_max_order(NamedClass::kCoK3Plus2P1) == 23);
}
