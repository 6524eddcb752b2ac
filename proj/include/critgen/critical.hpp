#pragma once

#include <optional>
#include <span>
#include <utility>

#include "critgen/graph.hpp"
#include "critgen/patterns.hpp"

namespace critgen {

/// is_vertex_critical holds iff chi == k and failing_vertex is empty.
struct CriticalityReport {
  int chi = 0;
  bool is_vertex_critical = false;
  /// A vertex whose deletion leaves chromatic number >= k, when one exists.
  std::optional<int> failing_vertex;
};

/// chi(g) == k and chi(g - v) <= k - 1 for every vertex v. Deletions are
/// tried in descending degree order.
CriticalityReport is_k_vertex_critical(const Graph& g, int k);

/// k-critical within the hereditary class: chi(g) == k and every proper
/// subgraph of g that is family-free has chromatic number at most k - 1.
bool is_k_critical_in_class(const Graph& g, int k, std::span<const Pattern> family);

/// Nonadjacent (u, v) with N(u) a subset of N(v), smallest u then v.
std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g);

/// Disjoint nonempty X, Y that are anticomplete, with chi(g[X]) <= chi(g[Y]) and
/// Y complete to N(X). No k-vertex-critical graph admits such a pair.
struct XYObstruction {
  VertexSet x;
  VertexSet y;
};

bool is_xy_obstruction(const Graph& g, VertexSet x, VertexSet y);

/// Searches |X|, |Y| <= max_size (1..3), smaller X first.
std::optional<XYObstruction> find_xy_obstruction(const Graph& g, int max_size);

/// Chromatic number of g[s].
int chromatic_number_of(const Graph& g, VertexSet s);

}  // namespace critgen
