#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// Isomorphism-class fingerprint: the graph6 encoding of the graph relabelled
/// by its canonical labeling. Equal bytes iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  int order() const;
  /// A graph isomorphic to every graph with this form.
  Graph decode() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};

/// labeling[v] is the canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// Sort key for graph lists: order first, then canonical bytes.
bool canonical_less(const CanonicalForm& a, const CanonicalForm& b);

}  // namespace critgen
