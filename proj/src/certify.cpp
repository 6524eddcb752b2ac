#include "critgen/certify.hpp"

#include <algorithm>
#include <numeric>

#include "critgen/canon.hpp"

namespace critgen {

Certificate certify_4_colorability(const Graph& g, std::span<const Graph> critical_list,
                                   std::span<const Pattern> family) {
  for (const Pattern& p : family) {
    if (find_induced(g, p.graph)) throw NotInClassError("input contains the forbidden pattern " + p.name);
  }
  if (auto coloring = is_k_colorable(g, 4)) return *std::move(coloring);

  std::vector<CanonicalForm> forms;
  forms.reserve(critical_list.size());
  for (const Graph& entry : critical_list) forms.push_back(canonical_form(entry));
  std::vector<std::size_t> order(critical_list.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return canonical_less(forms[a], forms[b]); });

  for (std::size_t index : order) {
    const Graph& entry = critical_list[index];
    if (entry.order() > g.order()) break;
    if (auto embedding = find_induced(g, entry)) {
      CriticalWitness w;
      w.list_index = index;
      for (int h : embedding->map) w.vertices.insert(h);
      w.embedding = *std::move(embedding);
      return w;
    }
  }
  throw IncompleteListError("graph is not 4-colorable but contains no graph of the critical list");
}

bool verify_certificate(const Graph& g, std::span<const Graph> critical_list, const Certificate& c) {
  if (const auto* coloring = std::get_if<Coloring>(&c)) {
    return coloring->colors_used <= 4 && is_proper_coloring(g, *coloring);
  }
  const auto& w = std::get<CriticalWitness>(c);
  if (w.list_index >= critical_list.size()) return false;
  const Graph& entry = critical_list[w.list_index];
  if (!is_induced_embedding(g, entry, w.embedding)) return false;
  VertexSet image;
  for (int h : w.embedding.map) image.insert(h);
  if (image != w.vertices) return false;
  return !is_k_colorable(induced_subgraph(g, w.vertices), 4).has_value();
}

}  // namespace critgen
