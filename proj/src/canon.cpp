#include "critgen/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "critgen/graph6.hpp"

namespace critgen {

namespace {

// Ordered partition of the vertex set; each cell is a bitset, cells in order.
struct Partition {
  int count = 0;
  std::array<std::uint64_t, 64> cells{};

  bool discrete(int n) const { return count == n; }
};

using Perm = std::array<std::int8_t, 64>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) twin_rep_[v] = static_cast<std::int8_t>(v);
    for (int u = 0; u < n_; ++u) {
      if (twin_rep_[u] != u) continue;
      for (int v = u + 1; v < n_; ++v) {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bv = std::uint64_t{1} << v;
        if ((g_.row(u) & ~bv) == (g_.row(v) & ~bu)) twin_rep_[v] = static_cast<std::int8_t>(u);
      }
    }
  }

  std::vector<int> run() {
    Partition p;
    if (n_ > 0) {
      p.count = 1;
      p.cells[0] = g_.vertices().bits();
    }
    descend(p, 0);
    std::vector<int> labeling(n_);
    for (int pos = 0; pos < n_; ++pos) labeling[best_perm_[pos]] = pos;
    return labeling;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. Depends
  // only on cell positions and counts, so it commutes with relabelling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed && !p.discrete(n_)) {
      changed = false;
      for (int s = 0; s < p.count && !p.discrete(n_); ++s) {
        const std::uint64_t splitter = p.cells[s];
        Partition next;
        bool split_any = false;
        for (int c = 0; c < p.count; ++c) {
          const std::uint64_t cell = p.cells[c];
          if ((cell & (cell - 1)) == 0) {
            next.cells[next.count++] = cell;
            continue;
          }
          std::array<std::uint64_t, 65> by_count{};
          int lo = 64;
          int hi = 0;
          for (int v : VertexSet(cell)) {
            const int k = std::popcount(g_.row(v) & splitter);
            by_count[k] |= std::uint64_t{1} << v;
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) {
            next.cells[next.count++] = cell;
            continue;
          }
          split_any = true;
          for (int k = lo; k <= hi; ++k) {
            if (by_count[k]) next.cells[next.count++] = by_count[k];
          }
        }
        if (split_any) {
          p = next;
          changed = true;
        }
      }
    }
  }

  void orbits_fixing(std::uint64_t fixed, std::array<std::int8_t, 64>& parent) const {
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::int8_t>(v);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = static_cast<std::int8_t>(std::min(a, b));
    };
    // Swapping two twins is always an automorphism.
    for (int v = 0; v < n_; ++v) {
      if (twin_rep_[v] == v || ((fixed >> v) & 1U)) continue;
      // Find the smallest unfixed member of v's twin class.
      for (int u = twin_rep_[v]; u < v; ++u) {
        if (twin_rep_[u] == twin_rep_[v] && !((fixed >> u) & 1U)) {
          unite(u, v);
          break;
        }
      }
    }
    for (const Perm& gen : generators_) {
      bool fixes = true;
      for (int v : VertexSet(fixed)) {
        if (gen[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) unite(v, gen[v]);
    }
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::int8_t>(find(v));
  }

  void descend(Partition p, std::uint64_t fixed) {
    refine(p);
    if (p.discrete(n_)) {
      leaf(p);
      return;
    }
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const std::uint64_t cell = p.cells[target];

    std::uint64_t tried = 0;
    std::array<std::int8_t, 64> orbit{};
    for (int v : VertexSet(cell)) {
      if (tried) {
        orbits_fixing(fixed, orbit);
        bool equivalent = false;
        for (int u : VertexSet(tried)) {
          if (orbit[u] == orbit[v]) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      Partition child;
      for (int c = 0; c < target; ++c) child.cells[child.count++] = p.cells[c];
      child.cells[child.count++] = std::uint64_t{1} << v;
      child.cells[child.count++] = cell & ~(std::uint64_t{1} << v);
      for (int c = target + 1; c < p.count; ++c) child.cells[child.count++] = p.cells[c];
      descend(child, fixed | (std::uint64_t{1} << v));
      tried |= std::uint64_t{1} << v;
    }
  }

  void leaf(const Partition& p) {
    Perm perm{};   // position -> vertex
    Perm where{};  // vertex -> position
    for (int pos = 0; pos < n_; ++pos) {
      perm[pos] = static_cast<std::int8_t>(std::countr_zero(p.cells[pos]));
      where[perm[pos]] = static_cast<std::int8_t>(pos);
    }
    std::array<std::uint64_t, 64> rows{};
    for (int pos = 0; pos < n_; ++pos) {
      std::uint64_t r = 0;
      for (int w : VertexSet(g_.row(perm[pos]))) r |= std::uint64_t{1} << where[w];
      rows[pos] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = rows;
      best_perm_ = perm;
      return;
    }
    const int cmp = compare(rows);
    if (cmp < 0) {
      best_rows_ = rows;
      best_perm_ = perm;
    } else if (cmp == 0) {
      Perm gamma{};
      bool identity = true;
      for (int pos = 0; pos < n_; ++pos) {
        gamma[perm[pos]] = best_perm_[pos];
        identity = identity && perm[pos] == best_perm_[pos];
      }
      if (!identity) generators_.push_back(gamma);
    }
  }

  int compare(const std::array<std::uint64_t, 64>& rows) const {
    for (int i = 0; i < n_; ++i) {
      if (rows[i] != best_rows_[i]) return rows[i] < best_rows_[i] ? -1 : 1;
    }
    return 0;
  }

  const Graph& g_;
  int n_;
  std::array<std::int8_t, 64> twin_rep_{};
  bool have_best_ = false;
  std::array<std::uint64_t, 64> best_rows_{};
  Perm best_perm_{};
  std::vector<Perm> generators_;
};

}  // namespace

int CanonicalForm::order() const {
  if (bytes.empty()) return 0;
  if (static_cast<unsigned char>(bytes[0]) != 126) return static_cast<unsigned char>(bytes[0]) - 63;
  return decode().order();
}

Graph CanonicalForm::decode() const { return decode_graph6(bytes); }

std::vector<int> canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalForm canonical_form(const Graph& g) { return {encode_graph6(canonical_graph(g))}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_graph(g) == canonical_graph(h);
}

bool canonical_less(const CanonicalForm& a, const CanonicalForm& b) {
  const int na = a.order();
  const int nb = b.order();
  if (na != nb) return na < nb;
  return a.bytes < b.bytes;
}

}  // namespace critgen
