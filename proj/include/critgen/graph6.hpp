#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// Malformed graph6 data or an unreadable list file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 encoding: header byte 63+n (or 126 followed by an 18-bit order for
/// n >= 63), then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
/// packed big-endian into 6-bit groups offset by 63.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. Strict mode rejects nonzero padding bits; length
/// mismatches and out-of-range bytes are always rejected. A leading ">>graph6<<"
/// marker and trailing whitespace are tolerated.
Graph decode_graph6(std::string_view text, bool strict = true);

/// One graph6 line per graph. Blank lines are skipped; errors name the line.
std::vector<Graph> read_graph_list(const std::filesystem::path& path);
std::vector<Graph> parse_graph_list(std::string_view contents);
void write_graph_list(const std::filesystem::path& path, const std::vector<Graph>& graphs);

/// Human-readable form: "n m" on the first line, then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace critgen
