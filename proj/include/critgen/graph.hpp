#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgen {

/// Raised when an operation receives an argument outside its domain
/// (bad vertex index, order overflow, degenerate constructor parameter).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertex indices of some host graph, stored as one 64-bit word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices. Row i of the
/// adjacency holds the neighbourhood of vertex i as a bitset.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Builds from adjacency rows, validating symmetry, irreflexivity and range.
  static Graph from_rows(std::span<const std::uint64_t> rows);
  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[check(v)]); }
  /// Unchecked row access for inner loops.
  std::uint64_t row(int v) const { return rows_[v]; }
  bool has_edge(int u, int v) const { return (rows_[check(u)] >> check(v)) & 1U; }
  int degree(int v) const { return std::popcount(rows_[check(v)]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;
  int check(int v) const {
    if (v < 0 || v >= n_) out_of_range(v);
    return v;
  }
  [[noreturn]] void out_of_range(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

/// Mutable staging area for building a Graph; `build()` hands out the value.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  explicit GraphBuilder(const Graph& start) : g_(start) {}

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  /// Appends a vertex adjacent exactly to `nbrs`; returns its index.
  int add_vertex(VertexSet nbrs);
  Graph build() const { return g_; }

 private:
  Graph g_;
};

Graph path(int t);
Graph cycle(int t);
Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph edgeless(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& g, const Graph& h);
/// `copies` disjoint copies of g.
Graph multiple(const Graph& g, int copies);

/// Graph on |s| vertices, relabelled in increasing index order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_vertex_with_neighborhood(const Graph& g, VertexSet nbrs);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

VertexSet neighborhood(const Graph& g, int v);
int degree(const Graph& g, int v);
bool is_connected(const Graph& g);

}  // namespace critgen
