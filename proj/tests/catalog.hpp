#pragma once

#include <map>
#include <set>
#include <vector>

#include "critgen/canon.hpp"
#include "critgen/graph.hpp"

namespace critgen::catalog {

/// One representative per isomorphism class for each order 0..max_order,
/// built by extending every class of the previous order in all 2^n ways.
inline std::map<int, std::vector<Graph>> all_graphs(int max_order) {
  std::map<int, std::vector<Graph>> out;
  out[0] = {Graph(0)};
  for (int n = 1; n <= max_order; ++n) {
    std::set<CanonicalForm> forms;
    for (const Graph& g : out[n - 1]) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        forms.insert(canonical_form(add_vertex_with_neighborhood(g, VertexSet(s))));
      }
    }
    for (const CanonicalForm& f : forms) out[n].push_back(f.decode());
  }
  return out;
}

}  // namespace critgen::catalog
