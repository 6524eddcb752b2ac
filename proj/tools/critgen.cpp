// critgen: enumerate, verify and use lists of vertex-critical H-free graphs.
//
//   critgen enumerate --k 5 --forbid p5 --forbid k1,3+p1 --seed auto --max-order 64 --out list.g6
//   critgen verify --k 5 --forbid p5 --forbid k1,3+p1 list.g6
//   critgen certify --forbid p5 --forbid k1,3+p1 --list list.g6 --input host.g6
//   critgen stats list.g6
//   critgen convert --to edges list.g6
//
// Exit codes: 0 ok / colorable, 1 verification failure / witness found,
// 2 enumeration truncated at the order cap, 3 input outside the graph class,
// 4 critical list incomplete, 5 usage or I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "critgen/canon.hpp"
#include "critgen/certify.hpp"
#include "critgen/color.hpp"
#include "critgen/critical.hpp"
#include "critgen/enumerate.hpp"
#include "critgen/graph6.hpp"
#include "critgen/patterns.hpp"

namespace {

using namespace critgen;

enum Exit : int { kOk = 0, kFailure = 1, kTruncated = 2, kNotInClass = 3, kIncompleteList = 4, kUsage = 5 };

std::vector<Pattern> parse_family(const std::vector<std::string>& texts) {
  std::vector<Pattern> family;
  for (const std::string& t : texts) family.push_back(parse_pattern(t));
  return family;
}

void print_histogram(const std::map<int, std::size_t>& counts, std::ostream& out) {
  std::size_t total = 0;
  for (auto [order, count] : counts) {
    out << "order " << order << ": " << count << '\n';
    total += count;
  }
  out << "total: " << total << '\n';
}

int run_enumerate(int k, const std::vector<std::string>& forbid, const std::vector<std::string>& seed_specs,
                  int max_order, const std::string& out_path, const std::string& open_path, bool no_prune,
                  int jobs, bool quiet) {
  const std::vector<Pattern> family = parse_family(forbid);
  const PruningFlags pruning = no_prune ? PruningFlags::none() : PruningFlags{};
  std::ostream* diag = quiet ? nullptr : &std::cerr;

  EnumerationResult result;
  const bool automatic = seed_specs.size() == 1 && seed_specs.front() == "auto";
  if (automatic) {
    const auto named = classify_family(family);
    if (!named || k != 5) {
      std::cerr << "--seed auto needs --k 5 and a family {p5, H} with H one of k1,3+p1, k1,4+p1, co(k3+2p1)\n";
      return kUsage;
    }
    if (max_order <= 0) max_order = default_max_order(*named);
    const Pattern& h = are_isomorphic(family[0].graph, path(5)) ? family[1] : family[0];
    result = enumerate_5vc(h, max_order, {pruning, jobs, diag, !open_path.empty()});
  } else {
    if (seed_specs.empty() || max_order <= 0) {
      std::cerr << "explicit seeds need --seed and --max-order\n";
      return kUsage;
    }
    SearchConfig cfg;
    cfg.k = k;
    cfg.family = family;
    cfg.max_order = max_order;
    cfg.pruning = pruning;
    cfg.jobs = jobs;
    cfg.diagnostics = diag;
    cfg.keep_open = !open_path.empty();
    for (const std::string& spec : seed_specs) {
      if (std::filesystem::exists(spec)) {
        for (const Graph& g : read_graph_list(spec)) cfg.seeds.push_back(g);
      } else {
        cfg.seeds.push_back(parse_pattern(spec).graph);
      }
    }
    result = enumerate(cfg);
  }

  if (!out_path.empty()) write_graph_list(out_path, result.graphs);
  if (!open_path.empty()) write_graph_list(open_path, result.open);
  print_histogram(result.per_order_counts, std::cout);
  std::cout << "nodes visited: " << result.nodes_visited << '\n';
  std::cout << "complete: " << (result.complete ? "yes" : "no") << '\n';
  if (!result.complete) {
    std::cerr << "search truncated at order " << max_order << "; the list is not exhaustive\n";
    return kTruncated;
  }
  return kOk;
}

int run_verify(int k, const std::vector<std::string>& forbid, const std::string& path, bool edge_critical,
               const std::string& subset_of) {
  const std::vector<Pattern> family = parse_family(forbid);
  const FamilyMatcher matcher(family);
  const std::vector<Graph> graphs = read_graph_list(path);
  std::map<int, std::size_t> vertex_critical;
  std::map<int, std::size_t> in_class;
  std::set<CanonicalForm> forms;
  int failures = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const std::string where = path + ":" + std::to_string(i + 1) + ": " + encode_graph6(g);
    if (!matcher.is_free(g)) {
      std::cerr << where << ": contains a forbidden pattern\n";
      ++failures;
      continue;
    }
    const CriticalityReport report = is_k_vertex_critical(g, k);
    if (!report.is_vertex_critical) {
      std::cerr << where << ": not " << k << "-vertex-critical (chi = " << report.chi;
      if (report.failing_vertex) std::cerr << ", deleting vertex " << *report.failing_vertex << " keeps chi >= " << k;
      std::cerr << ")\n";
      ++failures;
      continue;
    }
    if (!forms.insert(canonical_form(g)).second) {
      std::cerr << where << ": duplicate of an earlier graph\n";
      ++failures;
      continue;
    }
    ++vertex_critical[g.order()];
    if (edge_critical) {
      if (is_k_critical_in_class(g, k, family)) {
        ++in_class[g.order()];
      } else {
        std::cerr << where << ": not " << k << "-critical within the class\n";
        ++failures;
      }
    }
  }
  if (!subset_of.empty()) {
    std::set<CanonicalForm> reference;
    for (const Graph& g : read_graph_list(subset_of)) reference.insert(canonical_form(g));
    for (const CanonicalForm& f : forms) {
      if (!reference.contains(f)) {
        std::cerr << path << ": " << encode_graph6(f.decode()) << " missing from " << subset_of << '\n';
        ++failures;
      }
    }
  }
  std::cout << "vertex-critical\n";
  print_histogram(vertex_critical, std::cout);
  if (edge_critical) {
    std::cout << "critical in class\n";
    print_histogram(in_class, std::cout);
  }
  return failures == 0 ? kOk : kFailure;
}

int run_certify(const std::vector<std::string>& forbid, const std::string& list_path, const std::string& input) {
  const std::vector<Pattern> family = parse_family(forbid);
  const std::vector<Graph> list = read_graph_list(list_path);
  int status = kOk;
  for (const Graph& g : read_graph_list(input)) {
    Certificate cert;
    try {
      cert = certify_4_colorability(g, list, family);
    } catch (const NotInClassError& e) {
      std::cerr << encode_graph6(g) << ": " << e.what() << '\n';
      return kNotInClass;
    } catch (const IncompleteListError& e) {
      std::cerr << encode_graph6(g) << ": " << e.what() << '\n';
      return kIncompleteList;
    }
    if (const auto* coloring = std::get_if<Coloring>(&cert)) {
      std::cout << "COLORING";
      for (std::size_t v = 0; v < coloring->assignment.size(); ++v) {
        std::cout << " v" << v << '=' << coloring->assignment[v];
      }
      std::cout << '\n';
    } else {
      const auto& w = std::get<CriticalWitness>(cert);
      std::cout << "WITNESS";
      for (int v : w.vertices) std::cout << ' ' << v;
      std::cout << ' ' << encode_graph6(induced_subgraph(g, w.vertices)) << '\n';
      status = kFailure;
    }
  }
  return status;
}

int run_stats(const std::string& path) {
  const std::vector<Graph> graphs = read_graph_list(path);
  std::map<int, std::size_t> orders;
  std::map<int, std::size_t> chis;
  int min_edges = -1;
  int max_edges = 0;
  long total_edges = 0;
  for (const Graph& g : graphs) {
    ++orders[g.order()];
    ++chis[chromatic_number(g)];
    const int m = g.edge_count();
    min_edges = min_edges < 0 ? m : std::min(min_edges, m);
    max_edges = std::max(max_edges, m);
    total_edges += m;
  }
  std::cout << "graphs: " << graphs.size() << '\n';
  print_histogram(orders, std::cout);
  if (!graphs.empty()) {
    std::cout << "edges: min " << min_edges << ", max " << max_edges << ", mean "
              << static_cast<double>(total_edges) / static_cast<double>(graphs.size()) << '\n';
  }
  for (auto [chi, count] : chis) std::cout << "chi " << chi << ": " << count << '\n';
  return kOk;
}

int run_convert(const std::string& to, const std::string& input, const std::string& out_path) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw FormatError("cannot open " + input);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::ostringstream out;
  if (to == "edges") {
    bool first = true;
    for (const Graph& g : parse_graph_list(buf.str())) {
      if (!first) out << '\n';
      out << to_edge_list(g);
      first = false;
    }
  } else {
    // Blocks separated by blank lines, each "n m" followed by m edges.
    std::istringstream lines(buf.str());
    std::string line;
    std::string block;
    auto flush = [&] {
      if (block.find_first_not_of(" \t\r\n") != std::string::npos) out << encode_graph6(from_edge_list(block)) << '\n';
      block.clear();
    };
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        flush();
      } else {
        block += line + '\n';
      }
    }
    flush();
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!(f << out.str())) throw FormatError("cannot write " + out_path);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and use vertex-critical graphs in hereditary classes"};
  app.require_subcommand(1);

  int k = 5;
  std::vector<std::string> forbid;
  std::vector<std::string> seeds;
  int max_order = 0;
  std::string out_path;
  std::string open_path;
  bool no_prune = false;
  int jobs = 1;
  bool quiet = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "generate all k-vertex-critical family-free graphs");
  enumerate_cmd->add_option("--k", k, "chromatic number of the critical graphs")->check(CLI::Range(1, 64));
  enumerate_cmd->add_option("--forbid", forbid, "forbidden induced subgraph (pattern DSL)")->required();
  enumerate_cmd->add_option("--seed", seeds, "auto, a graph6 list file, or a pattern DSL graph")->required();
  enumerate_cmd->add_option("--max-order", max_order, "largest order explored")->check(CLI::Range(1, 64));
  enumerate_cmd->add_option("--out", out_path, "graph6 output file");
  enumerate_cmd->add_option("--open", open_path, "write the graphs left open at --max-order here");
  enumerate_cmd->add_flag("--no-prune", no_prune, "disable the obligation pruning rules");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::Range(0, 1024));
  enumerate_cmd->add_flag("--quiet", quiet, "no per-level progress on stderr");

  std::string file;
  bool edge_critical = false;
  std::string subset_of;
  auto* verify_cmd = app.add_subcommand("verify", "check every graph of a list is k-vertex-critical and family-free");
  verify_cmd->add_option("--k", k)->check(CLI::Range(1, 64));
  verify_cmd->add_option("--forbid", forbid)->required();
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_flag("--edge-critical", edge_critical, "also require k-criticality within the class");
  verify_cmd->add_option("--subset-of", subset_of, "require every graph to be isomorphic to one in this list");

  std::string list_path;
  std::string input;
  auto* certify_cmd = app.add_subcommand("certify", "4-coloring or 5-vertex-critical induced subgraph");
  certify_cmd->add_option("--forbid", forbid)->required();
  certify_cmd->add_option("--list", list_path, "complete 5-vertex-critical list")->required();
  certify_cmd->add_option("--input", input, "graph6 file of host graphs")->required();

  auto* stats_cmd = app.add_subcommand("stats", "order, edge and chromatic number statistics");
  stats_cmd->add_option("file", file)->required();

  std::string to = "edges";
  auto* convert_cmd = app.add_subcommand("convert", "graph6 <-> edge list text");
  convert_cmd->add_option("--to", to)->check(CLI::IsMember({"edges", "graph6"}));
  convert_cmd->add_option("file", file)->required();
  convert_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate_cmd) return run_enumerate(k, forbid, seeds, max_order, out_path, open_path, no_prune, jobs, quiet);
    if (*verify_cmd) return run_verify(k, forbid, file, edge_critical, subset_of);
    if (*certify_cmd) return run_certify(forbid, list_path, input);
    if (*stats_cmd) return run_stats(file);
    if (*convert_cmd) return run_convert(to, file, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
