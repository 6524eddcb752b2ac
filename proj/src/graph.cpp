#include "critgen/graph.hpp"

#include <algorithm>

namespace critgen {

namespace {

void require_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw InvalidParameter("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= 64) throw InvalidParameter("vertex index out of range: " + std::to_string(v));
    insert(v);
  }
}

Graph::Graph(int order) {
  require_order(order);
  n_ = order;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t mask = VertexSet::range(g.n_).bits();
  for (int i = 0; i < g.n_; ++i) {
    if (rows[i] & ~mask) throw InvalidParameter("adjacency row has bits beyond the order");
    if ((rows[i] >> i) & 1U) throw InvalidParameter("self-loop at vertex " + std::to_string(i));
    g.rows_[i] = rows[i];
  }
  for (int i = 0; i < g.n_; ++i) {
    for (int j : VertexSet(rows[i])) {
      if (!((rows[j] >> i) & 1U)) throw InvalidParameter("asymmetric adjacency");
    }
  }
  return g;
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::out_of_range(int v) const {
  throw InvalidParameter("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += std::popcount(rows_[i]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j : VertexSet(rows_[i] >> i >> 1 << i << 1)) out.emplace_back(i, j);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

GraphBuilder::GraphBuilder(int order) : g_(order) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  g_.check(u);
  g_.check(v);
  if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
  g_.rows_[u] |= std::uint64_t{1} << v;
  g_.rows_[v] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  g_.check(u);
  g_.check(v);
  g_.rows_[u] &= ~(std::uint64_t{1} << v);
  g_.rows_[v] &= ~(std::uint64_t{1} << u);
  return *this;
}

int GraphBuilder::add_vertex(VertexSet nbrs) {
  if (g_.n_ >= Graph::kMaxOrder) throw InvalidParameter("cannot grow a graph beyond 64 vertices");
  if (!nbrs.is_subset_of(g_.vertices())) throw InvalidParameter("neighbourhood names a missing vertex");
  const int v = g_.n_++;
  g_.rows_[v] = nbrs.bits();
  for (int u : nbrs) g_.rows_[u] |= std::uint64_t{1} << v;
  return v;
}

Graph path(int t) {
  if (t < 1) throw InvalidParameter("path needs at least one vertex");
  GraphBuilder b(t);
  for (int i = 0; i + 1 < t; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle(int t) {
  if (t < 3) throw InvalidParameter("cycle needs at least three vertices");
  GraphBuilder b(t);
  for (int i = 0; i < t; ++i) b.add_edge(i, (i + 1) % t);
  return b.build();
}

Graph complete(int n) {
  require_order(n);
  return complement(Graph(n));
}

Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw InvalidParameter("complete bipartite parts must be nonempty");
  return join(Graph(r), Graph(s));
}

Graph edgeless(int n) { return Graph(n); }

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  const std::uint64_t all = g.vertices().bits();
  for (int i = 0; i < g.order(); ++i) rows[i] = all & ~g.row(i) & ~(std::uint64_t{1} << i);
  return Graph::from_rows(rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  require_order(g.order() + h.order());
  std::vector<std::uint64_t> rows(g.order() + h.order());
  for (int i = 0; i < g.order(); ++i) rows[i] = g.row(i);
  for (int i = 0; i < h.order(); ++i) rows[g.order() + i] = h.row(i) << g.order();
  return Graph::from_rows(rows);
}

Graph join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  std::vector<std::uint64_t> rows(u.order());
  const std::uint64_t left = VertexSet::range(g.order()).bits();
  const std::uint64_t right = u.vertices().bits() & ~left;
  for (int i = 0; i < u.order(); ++i) rows[i] = u.row(i) | (i < g.order() ? right : left);
  return Graph::from_rows(rows);
}

Graph multiple(const Graph& g, int copies) {
  if (copies < 1) throw InvalidParameter("multiplier must be positive");
  Graph out = g;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw InvalidParameter("vertex set not contained in graph");
  std::array<int, 64> index{};
  int next = 0;
  for (int v : s) index[v] = next++;
  std::vector<std::uint64_t> rows(next);
  for (int v : s) {
    std::uint64_t r = 0;
    for (int w : VertexSet(g.row(v)) & s) r |= std::uint64_t{1} << index[w];
    rows[index[v]] = r;
  }
  return Graph::from_rows(rows);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidParameter("cannot delete missing vertex " + std::to_string(v));
  return induced_subgraph(g, g.vertices() - VertexSet::singleton(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw InvalidParameter("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  return GraphBuilder(g).remove_edge(u, v).build();
}

Graph add_vertex_with_neighborhood(const Graph& g, VertexSet nbrs) {
  GraphBuilder b(g);
  b.add_vertex(nbrs);
  return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InvalidParameter("permutation length differs from order");
  std::uint64_t hit = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((hit >> p) & 1U)) throw InvalidParameter("not a permutation");
    hit |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = 0;
    for (int w : VertexSet(g.row(v))) r |= std::uint64_t{1} << perm[w];
    rows[perm[v]] = r;
  }
  return Graph::from_rows(rows);
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

int degree(const Graph& g, int v) { return g.degree(v); }

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet reached = VertexSet::singleton(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= VertexSet(g.row(v));
    frontier = next - reached;
    reached |= next;
  }
  return reached == g.vertices();
}

}  // namespace critgen
