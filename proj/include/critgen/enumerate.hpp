#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "critgen/canon.hpp"
#include "critgen/graph.hpp"
#include "critgen/patterns.hpp"

namespace critgen {

struct PruningFlags {
  bool comparable_pair = true;
  bool xy_obstruction = true;
  /// Without any other obligation the new vertex still needs a neighbour.
  bool connectivity = true;
  /// A module M whose induced graph is not chi(M)-vertex-critical must be
  /// split by some new vertex: touch = miss = M.
  bool module_split = true;
  /// How many of the most restrictive candidate obligations are tried on each
  /// graph, besides every module split; the one admitting the fewest
  /// extensions is applied.
  int trials = 12;

  static PruningFlags none() { return {false, false, false, false, 1}; }
};

/// A requirement every vertex-critical supergraph must meet with some vertex
/// outside the current graph: adjacent to a vertex of `touch` and nonadjacent
/// to a vertex of `miss`. For a comparable pair N(u) <= N(v) this is
/// touch = {u}, miss = {v}; an empty `miss` asks for a neighbour in `touch`
/// only. Because a single such vertex exists in every
/// critical supergraph, extensions violating one obligation can be dropped.
struct ExpansionObligation {
  VertexSet touch;
  VertexSet miss;

  static ExpansionObligation comparable(int u, int v) {
    return {VertexSet::singleton(u), VertexSet::singleton(v)};
  }
  bool admits(VertexSet new_neighbors) const {
    return new_neighbors.intersects(touch) && (miss.empty() || !miss.is_subset_of(new_neighbors));
  }
};

struct SearchConfig {
  int k = 5;
  std::vector<Pattern> family;
  int max_order = 13;
  std::vector<Graph> seeds;
  PruningFlags pruning;
  /// Worker threads for the level-synchronous engine; 0 picks the hardware count.
  int jobs = 1;
  /// Per-level statistics go here when set.
  std::ostream* diagnostics = nullptr;
  /// Keep the graphs left open at max_order in EnumerationResult::open.
  bool keep_open = false;
};

struct EnumerationResult {
  /// Canonically labelled, sorted by (order, canonical form).
  std::vector<Graph> graphs;
  std::map<int, std::size_t> per_order_counts;
  std::uint64_t nodes_visited = 0;
  /// False when some graph at max_order still had an admissible family-free extension.
  bool complete = true;
  /// With keep_open: graphs at max_order that still had an admissible extension, sorted.
  std::vector<Graph> open;
};

/// Insert-if-absent set of canonical forms, sharded so workers rarely contend.
class SeenSet {
 public:
  bool insert_if_absent(const CanonicalForm& key);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_set<CanonicalForm, CanonicalFormHash> keys;
  };
  std::array<Shard, kShards> shards_;
};

/// Calls fn(extension, neighbourhood) for all 2^n subsets in ascending bitmask order.
void for_each_one_vertex_extension(const Graph& g, const std::function<void(const Graph&, VertexSet)>& fn);
std::vector<Graph> one_vertex_extensions(const Graph& g);

/// Obligations found in g. Module splits come first. The rest are ordered
/// most restrictive first by the fraction of all neighbourhoods they admit:
/// comparable pairs, then bounded X/Y obstructions (|X|, |Y| <= 2, or X a
/// whole component of a module). The connectivity obligation comes last.
/// Duplicates are removed.
std::vector<ExpansionObligation> candidate_obligations(const Graph& g, const PruningFlags& flags);
/// The first candidate obligation, if any.
std::optional<ExpansionObligation> choose_obligation(const Graph& g, const PruningFlags& flags);

/// Whether the last vertex of `extended` satisfies the obligation of its parent.
bool pruning_allows(const Graph& extended, const std::optional<ExpansionObligation>& obligation);

/// Depth-first search from one seed, sharing `seen` across calls. Graphs are
/// expanded in canonical labelling, so the visited node set does not depend
/// on arrival order.
EnumerationResult recursively_enumerate(const SearchConfig& cfg, const Graph& seed, SeenSet& seen,
                                        const std::function<void(const Graph&)>& out);

/// Level-by-level search over all seeds of cfg: same nodes and outputs as
/// recursively_enumerate with one shared seen-set, but only two levels of
/// canonical forms are held in memory and each level is split across workers.
EnumerationResult enumerate(const SearchConfig& cfg);

/// The three classes for which the antihole seeds are known to be sufficient.
enum class NamedClass { kClawPlusP1, kK14PlusP1, kCoK3Plus2P1 };

/// H of a named class as a pattern ("k1,3+p1", "k1,4+p1", "co(k3+2p1)").
Pattern named_pattern(NamedClass c);
/// Recognises {P5, H} (in either order, up to isomorphism) for a named H.
std::optional<NamedClass> classify_family(std::span<const Pattern> family);
/// Seeds for 5-vertex-critical P5-free search: complements of C5 and C7.
std::vector<Graph> antihole_seeds();

struct Enumerate5Options {
  PruningFlags pruning;
  int jobs = 1;
  std::ostream* diagnostics = nullptr;
  bool keep_open = false;
};

/// All 5-vertex-critical (P5, H)-free graphs up to max_order: the antihole
/// seeded search merged with K5 and the complement of C9. Exhaustive only
/// for the named classes.
EnumerationResult enumerate_5vc(const Pattern& h, int max_order, const Enumerate5Options& options = {});

/// Order of the largest critical graph of a named class: 13, 17 or 23.
int default_max_order(NamedClass c);

/// Sorts by (order, canonical form), replacing each graph by its canonical
/// labelling and dropping isomorphic duplicates.
std::vector<Graph> canonical_sorted(std::span<const Graph> graphs);

}  // namespace critgen
