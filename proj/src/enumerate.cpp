#include "critgen/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <set>
#include <thread>

#include "critgen/color.hpp"
#include "critgen/critical.hpp"

namespace critgen {

namespace {

void validate(const SearchConfig& cfg) {
  if (cfg.k < 1) throw InvalidParameter("k must be at least 1");
  if (cfg.max_order < 1 || cfg.max_order > Graph::kMaxOrder) throw InvalidParameter("max order must lie in [1, 64]");
}

double admitted_fraction(const ExpansionObligation& o) {
  return (1.0 - std::ldexp(1.0, -o.touch.size())) * (1.0 - std::ldexp(1.0, -o.miss.size()));
}

// Some clique of exactly `size` vertices inside pool, or an empty set.
VertexSet clique_in(const Graph& g, VertexSet pool, int size, VertexSet chosen = {}) {
  if (size == 0) return chosen;
  const VertexSet candidates = pool;
  for (int v : candidates) {
    pool.erase(v);
    if (pool.size() + 1 < size) break;
    VertexSet found = clique_in(g, pool & VertexSet(g.row(v)), size - 1, chosen | VertexSet::singleton(v));
    if (!found.empty()) return found;
  }
  return {};
}

// Components of g[within], or of its complement.
std::vector<VertexSet> components(const Graph& g, VertexSet within, bool complemented) {
  std::vector<VertexSet> out;
  while (!within.empty()) {
    VertexSet comp = VertexSet::singleton(within.first());
    for (VertexSet frontier = comp; !frontier.empty();) {
      VertexSet grown;
      for (int v : frontier) {
        const VertexSet nbrs = VertexSet(g.row(v)) & within;
        grown |= complemented ? within - nbrs - VertexSet::singleton(v) : nbrs;
      }
      frontier = grown - comp;
      comp |= grown;
    }
    within -= comp;
    out.push_back(comp);
  }
  return out;
}

struct NodeOutcome {
  bool critical = false;
  bool truncated = false;
};

// One step of the recursion for a family-free graph: criticality test when
// chi >= k, otherwise the admissible family-free one-vertex extensions.
class Expander {
 public:
  explicit Expander(const SearchConfig& cfg) : cfg_(cfg), family_(cfg.family) {}

  template <typename ChildFn>
  NodeOutcome process(const Graph& node, ChildFn&& child) const {
    NodeOutcome outcome;
    const int n = node.order();
    if (!colorable_within(node, node.vertices(), cfg_.k - 1)) {
      outcome.critical = true;
      for (int v = 0; v < n && outcome.critical; ++v) {
        outcome.critical = colorable_within(node, node.vertices() - VertexSet::singleton(v), cfg_.k - 1);
      }
      return outcome;
    }
    if (n >= Graph::kMaxOrder) {
      outcome.truncated = true;
      return outcome;
    }
    const auto candidates = candidate_obligations(node, cfg_.pruning);
    const bool at_cap = n >= cfg_.max_order;
    if (candidates.empty()) {
      if (at_cap) {
        outcome.truncated = extend(node, nullptr, 0, [](const Graph&) {}) > 0;
      } else {
        extend(node, nullptr, kUnlimited, child);
      }
      return outcome;
    }
    // Any one obligation is sound, so the one leaving the fewest children is
    // applied. At the cap only existence matters.
    std::size_t trials = std::max(1, cfg_.pruning.trials);
    for (const ExpansionObligation& o : candidates) {
      if (o.touch != o.miss) break;
      ++trials;
    }
    trials = std::min(trials, candidates.size());
    std::vector<Graph> best;
    std::size_t best_count = kUnlimited;
    for (std::size_t i = 0; i < trials && best_count > 0; ++i) {
      if (at_cap) {
        best_count = std::min(best_count, extend(node, &candidates[i], 0, [](const Graph&) {}));
        continue;
      }
      std::vector<Graph> children;
      const std::size_t count =
          extend(node, &candidates[i], best_count, [&](const Graph& g) { children.push_back(g); });
      if (count < best_count) {
        best_count = count;
        best = std::move(children);
      }
    }
    if (at_cap) {
      outcome.truncated = best_count > 0;
    } else {
      for (const Graph& g : best) child(g);
    }
    return outcome;
  }

 private:
  static constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

  // Family-free one-vertex extensions admitted by the obligation, passed to
  // `sink`. Stops once more than `limit` are found and returns the count.
  // The new vertex's neighbourhood is built one decision at a time, and a
  // partial choice is abandoned as soon as the decided part holds a
  // forbidden copy or can no longer meet the obligation.
  template <typename Sink>
  std::size_t extend(const Graph& node, const ExpansionObligation* obligation, std::size_t limit,
                     Sink&& sink) const {
    const int n = node.order();
    std::vector<int> order;
    VertexSet early;
    if (obligation) early = obligation->touch | obligation->miss;
    for (int v : early) order.push_back(v);
    for (int v : node.vertices() - early) order.push_back(v);
    GraphBuilder builder(node);
    builder.add_vertex({});
    VertexSet decided = VertexSet::singleton(n);
    VertexSet nbrs;
    std::size_t count = 0;
    std::function<void(std::size_t)> decide = [&](std::size_t depth) {
      if (obligation) {
        if (obligation->touch.is_subset_of(decided) && !nbrs.intersects(obligation->touch)) return;
        if (!obligation->miss.empty() && obligation->miss.is_subset_of(decided) && obligation->miss.is_subset_of(nbrs)) return;
      }
      if (depth == order.size()) {
        ++count;
        if (count <= limit) sink(builder.build());
        return;
      }
      const int v = order[depth];
      decided.insert(v);
      for (bool adjacent : {false, true}) {
        if (adjacent) {
          builder.add_edge(v, n);
          nbrs.insert(v);
        }
        if (family_.free_through_pair(builder.build(), n, v, decided)) decide(depth + 1);
        if (count > limit) break;
      }
      builder.remove_edge(v, n);
      nbrs.erase(v);
      decided.erase(v);
    };
    // Patterns on one vertex would only ever meet the new vertex alone.
    if (family_.free_after_extension(builder.build(), n, decided)) decide(0);
    return count;
  }

  const SearchConfig& cfg_;
  FamilyMatcher family_;
};

void finish(EnumerationResult& result) {
  result.graphs = canonical_sorted(result.graphs);
  result.open = canonical_sorted(result.open);
  result.per_order_counts.clear();
  for (const Graph& g : result.graphs) ++result.per_order_counts[g.order()];
}

}  // namespace

bool SeenSet::insert_if_absent(const CanonicalForm& key) {
  Shard& shard = shards_[CanonicalFormHash{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  return shard.keys.insert(key).second;
}

std::size_t SeenSet::size() const {
  std::size_t total = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.keys.size();
  }
  return total;
}

void for_each_one_vertex_extension(const Graph& g, const std::function<void(const Graph&, VertexSet)>& fn) {
  if (g.order() >= Graph::kMaxOrder) throw InvalidParameter("cannot extend a graph on 64 vertices");
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    fn(add_vertex_with_neighborhood(g, VertexSet(bits)), VertexSet(bits));
  }
}

std::vector<Graph> one_vertex_extensions(const Graph& g) {
  if (g.order() > 24) throw InvalidParameter("refusing to materialise more than 2^24 extensions");
  std::vector<Graph> out;
  for_each_one_vertex_extension(g, [&](const Graph& e, VertexSet) { out.push_back(e); });
  return out;
}

std::vector<ExpansionObligation> candidate_obligations(const Graph& g, const PruningFlags& flags) {
  struct Ranked {
    double fraction;
    int rank;
    ExpansionObligation obligation;
  };
  std::vector<Ranked> found;
  auto add = [&](const ExpansionObligation& o, int rank) { found.push_back({admitted_fraction(o), rank, o}); };
  const int n = g.order();
  if (flags.module_split) {
    // Recolouring a module M inside a colouring of G - v shows that M must be
    // chi(M)-vertex-critical in a vertex-critical G. If g[M] is not, M is no
    // module of G, and only a new vertex can split it.
    std::set<std::uint64_t> modules;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        VertexSet m{u, v};
        for (bool grew = true; grew;) {
          grew = false;
          for (int w : g.vertices() - m) {
            const VertexSet seen_by = g.neighbors(w) & m;
            if (!seen_by.empty() && seen_by != m) {
              m.insert(w);
              grew = true;
            }
          }
        }
        if (m == g.vertices() || !modules.insert(m.bits()).second) continue;
        const int chi = chromatic_number_of(g, m);
        bool critical = true;
        for (int w : m) {
          if (colorable_within(g, m - VertexSet::singleton(w), chi - 1)) continue;
          critical = false;
          break;
        }
        if (!critical) add({m, m}, -1);
      }
    }
  }
  if (flags.comparable_pair) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && !g.has_edge(u, v) && g.neighbors(u).is_subset_of(g.neighbors(v))) {
          add(ExpansionObligation::comparable(u, v), 0);
        }
      }
    }
  }
  if (flags.xy_obstruction) {
    auto consider = [&](VertexSet x) {
      VertexSet nx;
      for (int v : x) nx |= VertexSet(g.row(v));
      nx -= x;
      VertexSet pool;
      for (int w : g.vertices() - x - nx) {
        if (nx.is_subset_of(VertexSet(g.row(w)))) pool.insert(w);
      }
      if (pool.empty()) return;
      const int chi_x = chromatic_number_of(g, x);
      auto offer = [&](VertexSet y) {
        if (chromatic_number_of(g, y) >= chi_x) add({x, y}, 1);
      };
      for (int a : pool) offer(VertexSet::singleton(a));
      for (int a : pool) {
        for (int b : pool) {
          if (a < b) offer(VertexSet{a, b});
        }
      }
    };
    // Inside a module H that splits into components, a component C has no
    // neighbours in H, and everything outside H seeing C sees all of H. So any
    // Y in H - C with chi(Y) >= chi(C) pairs with X = C.
    std::function<void(VertexSet)> split = [&](VertexSet h) {
      const auto parts = components(g, h, false);
      if (parts.size() > 1) {
        std::vector<int> chi(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) chi[i] = chromatic_number_of(g, parts[i]);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (VertexSet y = clique_in(g, h - parts[i], chi[i]); !y.empty()) add({parts[i], y}, 1);
          for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i && chi[j] >= chi[i]) add({parts[i], parts[j]}, 1);
          }
        }
      } else if (const auto co = components(g, h, true); co.size() > 1) {
        for (VertexSet q : co) {
          if (q.size() > 1) split(q);
        }
        return;
      } else {
        return;
      }
      for (VertexSet c : parts) {
        if (c.size() > 1) split(c);
      }
    };
    split(g.vertices());
    for (int u = 0; u < n; ++u) consider(VertexSet::singleton(u));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) consider(VertexSet{u, v});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Ranked& a, const Ranked& b) {
    if ((a.rank < 0) != (b.rank < 0)) return a.rank < 0;
    return a.fraction != b.fraction ? a.fraction < b.fraction : a.rank < b.rank;
  });
  std::vector<ExpansionObligation> out;
  std::set<std::pair<std::uint64_t, std::uint64_t>> kept;
  for (const Ranked& r : found) {
    if (kept.emplace(r.obligation.touch.bits(), r.obligation.miss.bits()).second) out.push_back(r.obligation);
  }
  if (flags.connectivity && n > 0) out.push_back({g.vertices(), {}});
  return out;
}

std::optional<ExpansionObligation> choose_obligation(const Graph& g, const PruningFlags& flags) {
  auto all = candidate_obligations(g, flags);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool pruning_allows(const Graph& extended, const std::optional<ExpansionObligation>& obligation) {
  if (!obligation || extended.order() == 0) return true;
  return obligation->admits(extended.neighbors(extended.order() - 1));
}

EnumerationResult recursively_enumerate(const SearchConfig& cfg, const Graph& seed, SeenSet& seen,
                                        const std::function<void(const Graph&)>& out) {
  validate(cfg);
  EnumerationResult result;
  if (seed.order() > cfg.max_order || !is_family_free(seed, cfg.family)) return result;
  const Expander expander(cfg);

  std::function<void(const Graph&)> visit = [&](const Graph& g) {
    const CanonicalForm key = canonical_form(g);
    if (!seen.insert_if_absent(key)) return;
    const Graph node = key.decode();
    ++result.nodes_visited;
    const NodeOutcome outcome = expander.process(node, visit);
    if (outcome.truncated) {
      result.complete = false;
      if (cfg.keep_open) result.open.push_back(node);
    }
    if (outcome.critical) {
      result.graphs.push_back(node);
      if (out) out(node);
    }
  };
  visit(seed);
  finish(result);
  return result;
}

EnumerationResult enumerate(const SearchConfig& cfg) {
  validate(cfg);
  const FamilyMatcher family(cfg.family);
  std::map<int, std::vector<CanonicalForm>> seeds_by_order;
  for (const Graph& seed : cfg.seeds) {
    if (!family.is_free(seed)) throw InvalidParameter("seed " + canonical_form(seed).bytes + " is not family-free");
    if (seed.order() <= cfg.max_order) seeds_by_order[seed.order()].push_back(canonical_form(seed));
  }
  EnumerationResult result;
  if (seeds_by_order.empty()) return result;

  const int jobs = cfg.jobs > 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
  const Expander expander(cfg);
  std::vector<CanonicalForm> level;

  for (int order = seeds_by_order.begin()->first; order <= cfg.max_order; ++order) {
    if (auto it = seeds_by_order.find(order); it != seeds_by_order.end()) {
      level.insert(level.end(), it->second.begin(), it->second.end());
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    if (level.empty()) continue;

    struct WorkerState {
      std::unordered_set<CanonicalForm, CanonicalFormHash> children;
      std::vector<Graph> critical;
      bool truncated = false;
      std::vector<Graph> open;
    };
    std::vector<WorkerState> states(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&](WorkerState& state) {
      for (std::size_t i = next++; i < level.size(); i = next++) {
        const Graph node = level[i].decode();
        const NodeOutcome outcome =
            expander.process(node, [&](const Graph& child) { state.children.insert(canonical_form(child)); });
        if (outcome.truncated) {
          state.truncated = true;
          if (cfg.keep_open) state.open.push_back(node);
        }
        if (outcome.critical) state.critical.push_back(node);
      }
    };
    if (jobs == 1) {
      work(states[0]);
    } else {
      std::vector<std::jthread> workers;
      for (int j = 0; j < jobs; ++j) workers.emplace_back([&, j] { work(states[j]); });
    }

    std::unordered_set<CanonicalForm, CanonicalFormHash> merged = std::move(states[0].children);
    std::size_t found = 0;
    for (WorkerState& s : states) {
      if (&s != &states[0]) {
        merged.insert(std::make_move_iterator(s.children.begin()), std::make_move_iterator(s.children.end()));
        s.children.clear();
      }
      if (s.truncated) result.complete = false;
      result.open.insert(result.open.end(), s.open.begin(), s.open.end());
      found += s.critical.size();
      result.graphs.insert(result.graphs.end(), s.critical.begin(), s.critical.end());
    }
    result.nodes_visited += level.size();
    if (cfg.diagnostics) {
      *cfg.diagnostics << "order " << order << ": " << level.size() << " nodes, " << found << " critical, "
                       << merged.size() << " children" << std::endl;
    }
    level.assign(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
    merged.clear();
    std::sort(level.begin(), level.end());
  }
  finish(result);
  return result;
}

Pattern named_pattern(NamedClass c) {
  switch (c) {
    case NamedClass::kClawPlusP1:
      return parse_pattern("k1,3+p1");
    case NamedClass::kK14PlusP1:
      return parse_pattern("k1,4+p1");
    case NamedClass::kCoK3Plus2P1:
      return parse_pattern("co(k3+2p1)");
  }
  throw InvalidParameter("unknown class");
}

std::optional<NamedClass> classify_family(std::span<const Pattern> family) {
  if (family.size() != 2) return std::nullopt;
  const Graph p5 = path(5);
  for (int i = 0; i < 2; ++i) {
    if (!are_isomorphic(family[i].graph, p5)) continue;
    const Graph& other = family[1 - i].graph;
    for (NamedClass c : {NamedClass::kClawPlusP1, NamedClass::kK14PlusP1, NamedClass::kCoK3Plus2P1}) {
      if (are_isomorphic(other, named_pattern(c).graph)) return c;
    }
  }
  return std::nullopt;
}

std::vector<Graph> antihole_seeds() { return {complement(cycle(5)), complement(cycle(7))}; }

int default_max_order(NamedClass c) {
  switch (c) {
    case NamedClass::kClawPlusP1:
      return 13;
    case NamedClass::kK14PlusP1:
      return 17;
    case NamedClass::kCoK3Plus2P1:
      return 23;
  }
  return 13;
}

EnumerationResult enumerate_5vc(const Pattern& h, int max_order, const Enumerate5Options& options) {
  SearchConfig cfg;
  cfg.k = 5;
  cfg.family = {parse_pattern("p5"), h};
  cfg.max_order = max_order;
  cfg.pruning = options.pruning;
  cfg.jobs = options.jobs;
  cfg.diagnostics = options.diagnostics;
  cfg.keep_open = options.keep_open;
  for (const Graph& seed : antihole_seeds()) {
    if (is_family_free(seed, cfg.family)) cfg.seeds.push_back(seed);
  }
  EnumerationResult result = enumerate(cfg);
  for (const Graph& sporadic : {complete(5), complement(cycle(9))}) {
    if (sporadic.order() > max_order || !is_family_free(sporadic, cfg.family)) continue;
    if (is_k_vertex_critical(sporadic, 5).is_vertex_critical) result.graphs.push_back(sporadic);
  }
  finish(result);
  return result;
}

std::vector<Graph> canonical_sorted(std::span<const Graph> graphs) {
  std::vector<CanonicalForm> forms;
  forms.reserve(graphs.size());
  for (const Graph& g : graphs) forms.push_back(canonical_form(g));
  std::sort(forms.begin(), forms.end(), canonical_less);
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(f.decode());
  return out;
}

}  // namespace critgen
