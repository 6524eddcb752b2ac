#include "critgen/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace critgen {

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const auto c = static_cast<unsigned char>(text[i]);
      if (std::isspace(c)) continue;
      chars_.push_back(static_cast<char>(std::tolower(c)));
      where_.push_back(i);
    }
    where_.push_back(text.size());
  }

  Pattern parse() {
    if (chars_.empty()) fail("empty pattern");
    Pattern p = expr();
    if (pos_ != chars_.size()) fail(std::string("unexpected '") + chars_[pos_] + "'");
    if (p.graph.order() < 1) fail("pattern has no vertices");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw PatternParseError(what, where_[pos_]); }

  bool at(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }
  bool at_digit() const { return pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_])); }

  int number() {
    if (!at_digit()) fail("expected a number");
    long value = 0;
    while (at_digit()) {
      value = value * 10 + (chars_[pos_++] - '0');
      if (value > Graph::kMaxOrder) fail("number exceeds 64");
    }
    return static_cast<int>(value);
  }

  Pattern expr() {
    Pattern p = term();
    while (at('+')) {
      ++pos_;
      const std::size_t start = pos_;
      Pattern rhs = term();
      if (p.graph.order() + rhs.graph.order() > Graph::kMaxOrder) {
        pos_ = start;
        fail("pattern exceeds 64 vertices");
      }
      p.name += "+" + rhs.name;
      p.graph = disjoint_union(p.graph, rhs.graph);
    }
    return p;
  }

  Pattern term() {
    int copies = 1;
    const std::size_t start = pos_;
    if (at_digit()) {
      copies = number();
      if (copies < 1) {
        pos_ = start;
        fail("multiplier must be positive");
      }
    }
    Pattern a = atom();
    if (copies == 1) return a;
    if (static_cast<long>(a.graph.order()) * copies > Graph::kMaxOrder) {
      pos_ = start;
      fail("pattern exceeds 64 vertices");
    }
    const bool compound = a.name.find('+') != std::string::npos;
    return {std::to_string(copies) + (compound ? "(" + a.name + ")" : a.name), multiple(a.graph, copies)};
  }

  Pattern atom() {
    const std::size_t start = pos_;
    try {
      if (at('c') && pos_ + 1 < chars_.size() && chars_[pos_ + 1] == 'o') {
        pos_ += 2;
        if (!at('(')) fail("expected '(' after co");
        ++pos_;
        Pattern inner = expr();
        if (!at(')')) fail("expected ')'");
        ++pos_;
        return {"co(" + inner.name + ")", complement(inner.graph)};
      }
      if (at('(')) {
        ++pos_;
        Pattern inner = expr();
        if (!at(')')) fail("expected ')'");
        ++pos_;
        return inner;
      }
      if (at('p')) {
        ++pos_;
        const int t = number();
        return {"p" + std::to_string(t), path(t)};
      }
      if (at('c')) {
        ++pos_;
        const int t = number();
        return {"c" + std::to_string(t), cycle(t)};
      }
      if (at('k')) {
        ++pos_;
        const int r = number();
        if (!at(',')) return {"k" + std::to_string(r), complete(r)};
        ++pos_;
        const int s = number();
        return {"k" + std::to_string(r) + "," + std::to_string(s), complete_bipartite(r, s)};
      }
    } catch (const InvalidParameter& e) {
      pos_ = start;
      fail(e.what());
    }
    fail("expected one of p, c, k, co(");
  }

  std::vector<char> chars_;
  std::vector<std::size_t> where_;
  std::size_t pos_ = 0;
};

}  // namespace

Pattern parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

InducedMatcher::InducedMatcher(const Graph& pattern) : pattern_(pattern) {
  if (pattern.order() < 1) throw InvalidParameter("pattern must have at least one vertex");
  int first = 0;
  for (int v = 1; v < pattern.order(); ++v) {
    if (pattern.degree(v) > pattern.degree(first)) first = v;
  }
  global_ = make_plan({first});
  for (int a = 0; a < pattern.order(); ++a) {
    anchored_.push_back(make_plan({a}));
    for (int b = 0; b < pattern.order(); ++b) {
      if (b != a) paired_.push_back(make_plan({a, b}));
    }
  }
}

InducedMatcher::Plan InducedMatcher::make_plan(std::vector<int> order) const {
  const int k = pattern_.order();
  std::uint64_t placed = 0;
  for (int v : order) placed |= std::uint64_t{1} << v;
  while (static_cast<int>(order.size()) < k) {
    int pick = -1;
    int pick_links = -1;
    for (int v = 0; v < k; ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(pattern_.row(v) & placed);
      if (pick < 0 || links > pick_links || (links == pick_links && pattern_.degree(v) > pattern_.degree(pick))) {
        pick = v;
        pick_links = links;
      }
    }
    order.push_back(pick);
    placed |= std::uint64_t{1} << pick;
  }
  Plan plan;
  for (std::size_t d = 0; d < order.size(); ++d) {
    Step s{order[d], pattern_.degree(order[d]), {}, {}};
    for (std::size_t e = 0; e < d; ++e) {
      (pattern_.has_edge(order[d], order[e]) ? s.adjacent_earlier : s.nonadjacent_earlier)
          .push_back(static_cast<int>(e));
    }
    plan.push_back(std::move(s));
  }
  return plan;
}

bool InducedMatcher::extend(const Graph& host, const Plan& plan, std::size_t depth, std::uint64_t used,
                            std::vector<int>& image) const {
  if (depth == plan.size()) return true;
  const Step& step = plan[depth];
  std::uint64_t candidates = host.vertices().bits() & ~used;
  for (int e : step.adjacent_earlier) candidates &= host.row(image[e]);
  for (int e : step.nonadjacent_earlier) candidates &= ~host.row(image[e]);
  while (candidates) {
    const int h = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (std::popcount(host.row(h)) < step.min_degree) continue;
    image[depth] = h;
    if (extend(host, plan, depth + 1, used | (std::uint64_t{1} << h), image)) return true;
  }
  return false;
}

Embedding InducedMatcher::to_embedding(const Plan& plan, const std::vector<int>& image) const {
  Embedding e;
  e.map.resize(plan.size());
  for (std::size_t d = 0; d < plan.size(); ++d) e.map[plan[d].vertex] = image[d];
  return e;
}

std::optional<Embedding> InducedMatcher::find(const Graph& host) const {
  if (host.order() < pattern_.order()) return std::nullopt;
  std::vector<int> image(global_.size());
  if (!extend(host, global_, 0, 0, image)) return std::nullopt;
  return to_embedding(global_, image);
}

std::optional<Embedding> InducedMatcher::find_through(const Graph& host, int v, VertexSet within) const {
  if (host.order() < pattern_.order() || v < 0 || v >= host.order()) return std::nullopt;
  const int host_degree = host.degree(v);
  std::vector<int> image(pattern_.order());
  for (const Plan& plan : anchored_) {
    if (plan[0].min_degree > host_degree) continue;
    image[0] = v;
    if (extend(host, plan, 1, (std::uint64_t{1} << v) | ~within.bits(), image)) return to_embedding(plan, image);
  }
  return std::nullopt;
}

std::optional<Embedding> InducedMatcher::find_through_pair(const Graph& host, int v, int u, VertexSet within) const {
  if (host.order() < pattern_.order()) return std::nullopt;
  const bool adjacent = host.has_edge(v, u);
  const int dv = host.degree(v);
  const int du = host.degree(u);
  std::vector<int> image(pattern_.order());
  for (const Plan& plan : paired_) {
    if (pattern_.has_edge(plan[0].vertex, plan[1].vertex) != adjacent) continue;
    if (plan[0].min_degree > dv || plan[1].min_degree > du) continue;
    image[0] = v;
    image[1] = u;
    const std::uint64_t used = (std::uint64_t{1} << v) | (std::uint64_t{1} << u) | ~within.bits();
    if (extend(host, plan, 2, used, image)) return to_embedding(plan, image);
  }
  return std::nullopt;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  std::uint64_t used = 0;
  for (int h : e.map) {
    if (h < 0 || h >= host.order() || ((used >> h) & 1U)) return false;
    used |= std::uint64_t{1} << h;
  }
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      if (pattern.has_edge(a, b) != host.has_edge(e.map[a], e.map[b])) return false;
    }
  }
  return true;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  return InducedMatcher(pattern).find(host);
}

bool is_family_free(const Graph& host, std::span<const Pattern> family) {
  return FamilyMatcher(family).is_free(host);
}

bool free_after_extension(const Graph& host, std::span<const Pattern> family, int new_vertex) {
  return FamilyMatcher(family).free_after_extension(host, new_vertex);
}

FamilyMatcher::FamilyMatcher(std::span<const Pattern> family) {
  for (const Pattern& p : family) matchers_.emplace_back(p.graph);
}

bool FamilyMatcher::is_free(const Graph& host) const {
  return std::none_of(matchers_.begin(), matchers_.end(),
                      [&](const InducedMatcher& m) { return m.find(host).has_value(); });
}

bool FamilyMatcher::free_after_extension(const Graph& host, int new_vertex) const {
  return std::none_of(matchers_.begin(), matchers_.end(),
                      [&](const InducedMatcher& m) { return m.find_through(host, new_vertex).has_value(); });
}

bool FamilyMatcher::free_after_extension(const Graph& host, int new_vertex, VertexSet within) const {
  return std::none_of(matchers_.begin(), matchers_.end(), [&](const InducedMatcher& m) {
    return m.find_through(host, new_vertex, within).has_value();
  });
}

bool FamilyMatcher::free_through_pair(const Graph& host, int new_vertex, int other, VertexSet within) const {
  return std::none_of(matchers_.begin(), matchers_.end(), [&](const InducedMatcher& m) {
    return m.find_through_pair(host, new_vertex, other, within).has_value();
  });
}

}  // namespace critgen
