#pragma once

#include <optional>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// assignment[v] in [0, colors_used); every index in that range is used.
struct Coloring {
  std::vector<int> assignment;
  int colors_used = 0;
};

/// Proper k-coloring of g if one exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Decision-only variant restricted to the vertices in `active`; the hot path
/// of criticality tests (g - v is `active` = V \ {v}).
bool colorable_within(const Graph& g, VertexSet active, int k);

int chromatic_number(const Graph& g);
int clique_number(const Graph& g);
/// Colors used by saturation-degree (DSATUR) greedy coloring.
int greedy_upper_bound(const Graph& g);

/// Independent check: right length, indices contiguous from 0, no monochromatic edge.
bool is_proper_coloring(const Graph& g, const Coloring& c);

}  // namespace critgen
