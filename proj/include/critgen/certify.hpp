#pragma once

#include <span>
#include <stdexcept>
#include <variant>

#include "critgen/color.hpp"
#include "critgen/graph.hpp"
#include "critgen/patterns.hpp"

namespace critgen {

/// Host vertices inducing a copy of critical_list[list_index].
struct CriticalWitness {
  VertexSet vertices;
  std::size_t list_index = 0;
  Embedding embedding;  // list-entry vertex -> host vertex
};

/// Exactly one of: a proper coloring with at most 4 colors, or a witness.
using Certificate = std::variant<Coloring, CriticalWitness>;

/// The input graph contains a forbidden pattern, so the list gives no guarantee.
class NotInClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph needs 5 colors but no list entry occurs in it: the list is wrong or truncated.
class IncompleteListError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-phase certificate: an exact 4-coloring search, then a scan of the
/// critical list in ascending (order, canonical form) for an induced copy.
/// The first hit is returned, so witnesses have minimum order.
Certificate certify_4_colorability(const Graph& g, std::span<const Graph> critical_list,
                                   std::span<const Pattern> family);

/// Independent re-check of a certificate against its host graph and list.
bool verify_certificate(const Graph& g, std::span<const Graph> critical_list, const Certificate& c);

}  // namespace critgen
