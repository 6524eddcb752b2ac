#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CRITGEN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "critgen_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::string kClaw = "--forbid p5 --forbid k1,3+p1";

}  // namespace

TEST_CASE("enumerate, verify and certify") {
  const auto list = scratch("list9.g6", "");
  const Run e = run("enumerate " + kClaw + " --seed auto --max-order 9 --quiet --out " + list.string());
  CHECK(e.status == 2);  // capped below the largest critical graph
  CHECK(e.out.find("order 9: 198") != std::string::npos);
  CHECK(e.out.find("total: 207") != std::string::npos);
  CHECK(e.out.find("complete: no") != std::string::npos);

  const Run v = run("verify --k 5 " + kClaw + " " + list.string());
  CHECK(v.status == 0);
  CHECK(v.out.find("total: 207") != std::string::npos);
  CHECK(run("verify --k 5 " + kClaw + " --subset-of " + list.string() + " " + list.string()).status == 0);
  CHECK(run("verify --k 4 " + kClaw + " " + list.string()).status == 1);

  const auto k5 = scratch("k5.g6", "D~{\n");
  const Run w = run("certify " + kClaw + " --list " + list.string() + " --input " + k5.string());
  CHECK(w.status == 1);
  CHECK(w.out == "WITNESS 0 1 2 3 4 D~{\n");

  const auto c5 = scratch("c5.g6", "Dhc\n");
  const Run c = run("certify " + kClaw + " --list " + list.string() + " --input " + c5.string());
  CHECK(c.status == 0);
  CHECK(c.out.rfind("COLORING v0=", 0) == 0);

  const auto p5 = scratch("p5.g6", "DhC\n");
  CHECK(run("certify " + kClaw + " --list " + list.string() + " --input " + p5.string()).status == 3);
  const auto empty = scratch("empty.g6", "");
  CHECK(run("certify " + kClaw + " --list " + empty.string() + " --input " + k5.string()).status == 4);
}

TEST_CASE("explicit seeds and no pruning") {
  const Run pruned = run("enumerate --k 5 " + kClaw + " --seed 'co(c5)' --seed 'co(c7)' --max-order 8 --quiet");
  const Run plain = run("enumerate --k 5 " + kClaw + " --seed 'co(c5)' --seed 'co(c7)' --max-order 8 --quiet --no-prune");
  CHECK(pruned.status == 2);
  CHECK(pruned.out.substr(0, pruned.out.find("nodes")) == plain.out.substr(0, plain.out.find("nodes")));
  const Run k5 = run("enumerate --k 5 " + kClaw + " --seed k5 --max-order 6 --quiet");
  CHECK(k5.status == 0);
  CHECK(k5.out.find("complete: yes") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("enumerate --k 4 " + kClaw + " --seed auto --quiet").status == 5);
  CHECK(run("enumerate --k 5 --forbid p4 --seed auto --quiet").status == 5);
  CHECK(run("enumerate --k 5 --forbid 'p5(' --seed k5 --max-order 6").status == 5);
  CHECK(run("verify --k 5 --forbid p5 /nonexistent/list.g6").status == 5);
  CHECK(run("frobnicate").status == 5);
  const auto bad = scratch("bad.g6", "D~{\nnot graph6!\n");
  CHECK(run("stats " + bad.string()).status == 5);
}

TEST_CASE("convert and stats") {
  const auto g6 = scratch("pair.g6", "Dhc\nD~{\n");
  const Run edges = run("convert --to edges " + g6.string());
  CHECK(edges.status == 0);
  CHECK(edges.out.rfind("5 5\n", 0) == 0);
  const auto text = scratch("pair.txt", edges.out);
  const Run back = run("convert --to graph6 " + text.string());
  CHECK(back.out == "Dhc\nD~{\n");
  const Run stats = run("stats " + g6.string());
  CHECK(stats.out.find("graphs: 2") != std::string::npos);
  CHECK(stats.out.find("chi 5: 1") != std::string::npos);
  CHECK(slurp(g6) == "Dhc\nD~{\n");
}
