#include "critgen/graph6.hpp"

#include <fstream>
#include <sstream>

namespace critgen {

namespace {

constexpr int kOffset = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(kOffset + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text, bool strict) {
  constexpr std::string_view kMarker = ">>graph6<<";
  if (text.starts_with(kMarker)) text.remove_prefix(kMarker.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("graph6: empty line");
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw FormatError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  int n = static_cast<unsigned char>(text[pos++]) - kOffset;
  if (n == 63) {
    if (text.size() < 4) throw FormatError("graph6: truncated order header");
    if (text[1] == 126) throw FormatError("graph6: order exceeds 64 vertices");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | (static_cast<unsigned char>(text[pos++]) - kOffset);
    if (n < 63) throw FormatError("graph6: long header used for small order");
  }
  if (n > Graph::kMaxOrder) throw FormatError("graph6: order " + std::to_string(n) + " exceeds 64 vertices");
  if (text.size() - pos != payload_bytes(n)) throw FormatError("graph6: payload length does not match order");

  GraphBuilder b(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(text[pos + bit / 6]) - kOffset;
      if ((value >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (strict && bit % 6 != 0) {
    const int value = static_cast<unsigned char>(text.back()) - kOffset;
    if (value & ((1 << (6 - bit % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::vector<Graph> parse_graph_list(std::string_view contents) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    const std::size_t end = contents.find('\n');
    std::string_view line = contents.substr(0, end);
    contents.remove_prefix(end == std::string_view::npos ? contents.size() : end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_list(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_graph_list(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || m < 0) throw FormatError("edge list: expected header \"n m\"");
  try {
    GraphBuilder b(n);
    for (int e = 0; e < m; ++e) {
      int u = 0;
      int v = 0;
      if (!(in >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges");
      b.add_edge(u, v);
    }
    return b.build();
  } catch (const InvalidParameter& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

}  // namespace critgen
