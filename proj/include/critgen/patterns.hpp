#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// A named forbidden induced subgraph. `name` is the normalised DSL text, so
/// parse_pattern(p.name) rebuilds the same graph.
struct Pattern {
  std::string name;
  Graph graph;
};

class PatternParseError : public std::invalid_argument {
 public:
  PatternParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (case-insensitive, blanks ignored):
///   expr := term ("+" term)*
///   term := [multiplier] atom
///   atom := "p"N | "c"N | "k"N | "k"R","S | "co(" expr ")" | "(" expr ")"
/// "+" is disjoint union, a multiplier m repeats the atom m times, co() complements.
Pattern parse_pattern(std::string_view text);

/// map[i] is the host vertex playing pattern vertex i.
struct Embedding {
  std::vector<int> map;
};

/// Precompiled backtracking search for induced copies of one pattern.
/// Pattern vertices are placed highest degree first, then by most already
/// placed neighbours; candidates are filtered with bitset adjacency tests.
class InducedMatcher {
 public:
  explicit InducedMatcher(const Graph& pattern);

  const Graph& pattern() const { return pattern_; }
  std::optional<Embedding> find(const Graph& host) const;
  /// Only embeddings using host vertex `v`, with every image inside `within`.
  std::optional<Embedding> find_through(const Graph& host, int v,
                                        VertexSet within = VertexSet::range(Graph::kMaxOrder)) const;
  /// Only embeddings using both host vertices `v` and `u` (v != u), images inside `within`.
  std::optional<Embedding> find_through_pair(const Graph& host, int v, int u, VertexSet within) const;

 private:
  struct Step {
    int vertex;
    int min_degree;
    std::vector<int> adjacent_earlier;     // indices into the placement order
    std::vector<int> nonadjacent_earlier;
  };
  using Plan = std::vector<Step>;

  Plan make_plan(std::vector<int> order) const;
  bool extend(const Graph& host, const Plan& plan, std::size_t depth, std::uint64_t used,
              std::vector<int>& image) const;
  Embedding to_embedding(const Plan& plan, const std::vector<int>& image) const;

  Graph pattern_;
  Plan global_;
  std::vector<Plan> anchored_;  // anchored_[a] places pattern vertex a first
  std::vector<Plan> paired_;    // every ordered pair of distinct pattern vertices placed first
};

/// Re-checks every pattern pair: edge in pattern iff edge between images.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);
bool is_family_free(const Graph& host, std::span<const Pattern> family);
/// Freeness of `host` assuming host - new_vertex was already family-free.
bool free_after_extension(const Graph& host, std::span<const Pattern> family, int new_vertex);

/// Compiled family for repeated checks in a search loop.
class FamilyMatcher {
 public:
  explicit FamilyMatcher(std::span<const Pattern> family);
  bool is_free(const Graph& host) const;
  bool free_after_extension(const Graph& host, int new_vertex) const;
  /// As above, looking only at the subgraph induced by `within` (which contains new_vertex).
  bool free_after_extension(const Graph& host, int new_vertex, VertexSet within) const;
  /// No copy inside `within` uses both new_vertex and `other`.
  bool free_through_pair(const Graph& host, int new_vertex, int other, VertexSet within) const;

 private:
  std::vector<InducedMatcher> matchers_;
};

}  // namespace critgen
