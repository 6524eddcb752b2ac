#include "critgen/color.hpp"

#include <algorithm>
#include <array>

namespace critgen {

namespace {

// Backtracking over vertices in saturation order. A fresh color may only be
// opened as the next unused index, which removes color-permutation symmetry.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, VertexSet active, int k) : g_(g), active_(active), k_(k) {
    colour_.fill(-1);
  }

  bool run() {
    if (k_ <= 0) return active_.empty();
    if (active_.size() <= k_) {
      for (int v : active_) assign(v, used_++);
      return true;
    }
    // Seed with a greedy clique: its vertices need distinct colors anyway.
    VertexSet candidates = active_;
    while (!candidates.empty()) {
      int pick = -1;
      int best = -1;
      for (int v : candidates) {
        const int d = std::popcount(g_.row(v) & candidates.bits());
        if (d > best) {
          best = d;
          pick = v;
        }
      }
      if (used_ == k_) return false;
      assign(pick, used_++);
      candidates &= VertexSet(g_.row(pick));
    }
    VertexSet uncolored = active_;
    for (int v : active_) {
      if (colour_[v] >= 0) uncolored.erase(v);
    }
    return solve(uncolored);
  }

  Coloring coloring() const {
    Coloring c;
    c.assignment.assign(g_.order(), 0);
    for (int v : active_) c.assignment[v] = colour_[v];
    c.colors_used = used_;
    return c;
  }

 private:
  void assign(int v, int c) {
    colour_[v] = static_cast<std::int8_t>(c);
    classes_[c] |= std::uint64_t{1} << v;
  }
  void unassign(int v) {
    classes_[colour_[v]] &= ~(std::uint64_t{1} << v);
    colour_[v] = -1;
  }

  std::uint64_t forbidden(int v) const {
    std::uint64_t mask = 0;
    for (int c = 0; c < used_; ++c) {
      if (g_.row(v) & classes_[c]) mask |= std::uint64_t{1} << c;
    }
    return mask;
  }

  bool solve(VertexSet uncolored) {
    if (uncolored.empty()) return true;
    int pick = -1;
    int pick_options = 65;
    int pick_degree = -1;
    std::uint64_t pick_forbidden = 0;
    for (int v : uncolored) {
      const std::uint64_t f = forbidden(v);
      const int options = used_ - std::popcount(f) + (used_ < k_ ? 1 : 0);
      if (options == 0) return false;
      const int d = std::popcount(g_.row(v) & uncolored.bits());
      if (options < pick_options || (options == pick_options && d > pick_degree)) {
        pick = v;
        pick_options = options;
        pick_degree = d;
        pick_forbidden = f;
      }
    }
    uncolored.erase(pick);
    for (int c = 0; c < used_; ++c) {
      if ((pick_forbidden >> c) & 1U) continue;
      assign(pick, c);
      if (solve(uncolored)) return true;
      unassign(pick);
    }
    if (used_ < k_) {
      assign(pick, used_++);
      if (solve(uncolored)) return true;
      --used_;
      unassign(pick);
    }
    return false;
  }

  const Graph& g_;
  VertexSet active_;
  int k_;
  int used_ = 0;
  std::array<std::int8_t, 64> colour_{};
  std::array<std::uint64_t, 64> classes_{};
};

void grow_clique(const Graph& g, int size, std::uint64_t candidates, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(g, size + 1, candidates & g.row(v), best);
  }
}

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  ColorSearch search(g, g.vertices(), k);
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

bool colorable_within(const Graph& g, VertexSet active, int k) {
  return ColorSearch(g, active & g.vertices(), k).run();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int k = clique_number(g);
  while (!colorable_within(g, g.vertices(), k)) ++k;
  return k;
}

int clique_number(const Graph& g) {
  int best = 0;
  grow_clique(g, 0, g.vertices().bits(), best);
  return best;
}

int greedy_upper_bound(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::uint64_t> seen(n, 0);  // colors present in each vertex's neighbourhood
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick < 0 || std::popcount(seen[v]) > std::popcount(seen[pick]) ||
          (std::popcount(seen[v]) == std::popcount(seen[pick]) && g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    const int c = std::countr_one(seen[pick]);
    colour[pick] = c;
    used = std::max(used, c + 1);
    for (int w : g.neighbors(pick)) seen[w] |= std::uint64_t{1} << c;
  }
  return used;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.order()) return false;
  std::vector<bool> hit(c.colors_used, false);
  for (int x : c.assignment) {
    if (x < 0 || x >= c.colors_used) return false;
    hit[x] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (auto [u, v] : g.edges()) {
    if (c.assignment[u] == c.assignment[v]) return false;
  }
  return true;
}

}  // namespace critgen
