#include "critgen/critical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "critgen/canon.hpp"
#include "critgen/color.hpp"

namespace critgen {

namespace {

// Decides whether some spanning subgraph of x (x itself included) is
// family-free with chromatic number >= k. Only spanning subgraphs matter:
// callers start from g - e with g k-vertex-critical, so every vertex deletion
// already drops below k colors.
class InClassSearch {
 public:
  InClassSearch(int k, std::span<const Pattern> family) : k_(k) {
    for (const Pattern& p : family) matchers_.emplace_back(p.graph);
  }

  bool has_critical_subgraph(const Graph& x) {
    if (colorable_within(x, x.vertices(), k_ - 1)) return false;
    CanonicalForm key = canonical_form(x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<Embedding> copy;
    const InducedMatcher* hit = nullptr;
    for (const InducedMatcher& m : matchers_) {
      copy = m.find(x);
      if (copy) {
        hit = &m;
        break;
      }
    }
    bool result = !copy.has_value();
    if (!result) {
      // Any family-free spanning subgraph must lose an edge inside this copy.
      for (auto [a, b] : hit->pattern().edges()) {
        if (has_critical_subgraph(delete_edge(x, copy->map[a], copy->map[b]))) {
          result = true;
          break;
        }
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  int k_;
  std::vector<InducedMatcher> matchers_;
  std::unordered_map<CanonicalForm, bool, CanonicalFormHash> memo_;
};

int small_chromatic_number(const Graph& g, VertexSet s) {
  if (s.empty()) return 0;
  int edges = 0;
  for (int v : s) edges += (VertexSet(g.row(v)) & s).size();
  edges /= 2;
  if (edges == 0) return 1;
  if (s.size() <= 2) return 2;
  if (s.size() == 3) return edges == 3 ? 3 : 2;
  return -1;
}

}  // namespace

int chromatic_number_of(const Graph& g, VertexSet s) {
  const int quick = small_chromatic_number(g, s);
  return quick >= 0 ? quick : chromatic_number(induced_subgraph(g, s));
}

CriticalityReport is_k_vertex_critical(const Graph& g, int k) {
  if (k < 1) throw InvalidParameter("criticality needs k >= 1");
  CriticalityReport report;
  report.chi = chromatic_number(g);
  if (report.chi < k) return report;
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  if (report.chi > k) {
    if (!order.empty()) report.failing_vertex = order.front();
    return report;
  }
  for (int v : order) {
    if (!colorable_within(g, g.vertices() - VertexSet::singleton(v), k - 1)) {
      report.failing_vertex = v;
      return report;
    }
  }
  report.is_vertex_critical = true;
  return report;
}

bool is_k_critical_in_class(const Graph& g, int k, std::span<const Pattern> family) {
  if (!is_k_vertex_critical(g, k).is_vertex_critical) return false;
  InClassSearch search(k, family);
  for (auto [u, v] : g.edges()) {
    if (search.has_critical_subgraph(delete_edge(g, u, v))) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || g.has_edge(u, v)) continue;
      if ((g.row(u) & ~g.row(v)) == 0) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

bool is_xy_obstruction(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty() || x.intersects(y)) return false;
  if (!x.is_subset_of(g.vertices()) || !y.is_subset_of(g.vertices())) return false;
  VertexSet nx;
  for (int v : x) nx |= VertexSet(g.row(v));
  nx -= x;
  if (nx.intersects(y)) return false;
  for (int w : y) {
    if (!nx.is_subset_of(VertexSet(g.row(w)))) return false;
  }
  return chromatic_number_of(g, x) <= chromatic_number_of(g, y);
}

namespace {

template <typename Fn>
void for_each_subset_upto(VertexSet pool, int max_size, Fn&& fn) {
  const std::vector<int> members = pool.to_vector();
  const int m = static_cast<int>(members.size());
  // Subsets by increasing size, lexicographic within a size.
  std::vector<int> idx;
  for (int size = 1; size <= std::min(max_size, m); ++size) {
    idx.resize(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet s;
      for (int i : idx) s.insert(members[i]);
      if (fn(s)) return;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

std::optional<XYObstruction> find_xy_obstruction(const Graph& g, int max_size) {
  if (max_size < 1 || max_size > 3) throw InvalidParameter("xy obstruction search supports sizes 1..3");
  std::optional<XYObstruction> found;
  for_each_subset_upto(g.vertices(), max_size, [&](VertexSet x) {
    VertexSet nx;
    for (int v : x) nx |= VertexSet(g.row(v));
    nx -= x;
    VertexSet pool;
    for (int w : g.vertices() - x - nx) {
      if (nx.is_subset_of(VertexSet(g.row(w)))) pool.insert(w);
    }
    if (pool.empty()) return false;
    const int chi_x = chromatic_number_of(g, x);
    for_each_subset_upto(pool, max_size, [&](VertexSet y) {
      if (chromatic_number_of(g, y) < chi_x) return false;
      found = XYObstruction{x, y};
      return true;
    });
    return found.has_value();
  });
  return found;
}

}  // namespace critgen
