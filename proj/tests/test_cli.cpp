#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hstretch/cli.hpp"
#include "hstretch/graph.hpp"
#include "hstretch/hierarchy.hpp"

namespace fs = std::filesystem;
using namespace hstretch;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("hstretch_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

// Minimal well-formedness check: balanced tags, nothing after the root closes.
bool balanced_xml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  bool root_closed = false;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const auto end = text.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (root_closed) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      root_closed = stack.empty();
    } else if (tag.back() != '/') {
      stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
  }
  return stack.empty() && root_closed;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("curve defaults") {
  TempDir dir;
  const auto res = run_cli({"curve", "--out", dir / "c.csv", "--svg", dir / "c.svg"});
  REQUIRE(res.code == 0);
  const std::string csv = slurp(dir / "c.csv");
  CHECK(csv.rfind("N,alpha,s_p,m,s_t\n", 0) == 0);
  CHECK(count(csv, "\n") == 1 + 5 * 401);
  CHECK(count(csv, "\n10,0.987,1,1,1\n") == 1);
  CHECK(count(csv, ",1,1,1\n") == 5);

  // byte-identical reruns
  REQUIRE(run_cli({"curve", "--out", dir / "c2.csv", "--svg", dir / "c2.svg"}).code == 0);
  CHECK(slurp(dir / "c2.csv") == csv);
  CHECK(slurp(dir / "c2.svg") == slurp(dir / "c.svg"));

  const std::string svg = slurp(dir / "c.svg");
  CHECK(balanced_xml(svg));
  CHECK(count(svg, "<polyline") == 5);
  CHECK(svg.find(">s_p</text>") != std::string::npos);
  CHECK(svg.find(">s_t</text>") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
}

TEST_CASE("curve options and errors") {
  const auto res = run_cli({"curve", "-N", "10,100", "--alpha", "2", "--sp-max", "2", "--step", "0.5"});
  REQUIRE(res.code == 0);
  CHECK(count(res.out, "\n") == 7);
  CHECK(res.out.find("\n10,2,1.5,1.25,") != std::string::npos);
  CHECK(res.out.find("\n100,2,2,1.5,0.3231652") != std::string::npos);
  CHECK(run_cli({"curve", "--sp-min", "3", "--sp-max", "2"}).code == cli::kDomain);
  CHECK(run_cli({"curve", "--alpha", "0"}).code == cli::kDomain);
  CHECK(run_cli({"curve", "--out", "/nonexistent-dir/x.csv"}).code == cli::kIo);
  CHECK(run_cli({"curve", "--bogus"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
}

TEST_CASE("gen, cluster, simulate pipeline") {
  TempDir dir;
  REQUIRE(run_cli({"gen", "ring", "8", "-o", dir / "ring.txt"}).code == 0);
  CHECK(load_graph(dir / "ring.txt") == make_ring(8));

  auto flat = run_cli({"simulate", "-g", dir / "ring.txt"});
  REQUIRE(flat.code == 0);
  CHECK(flat.out.find("  s_p: 1\n") != std::string::npos);
  CHECK(flat.out.find("  s_t: 1\n") != std::string::npos);

  REQUIRE(run_cli({"cluster", "-g", dir / "ring.txt", "-l", "2", "-b", "2", "-o", dir / "ring.h"}).code == 0);
  auto two = run_cli({"simulate", "-g", dir / "ring.txt", "-H", dir / "ring.h", "--csv", dir / "runs.csv",
                      "--report", dir / "report.txt"});
  REQUIRE(two.code == 0);
  CHECK(slurp(dir / "report.txt").find("  s_t: 0.625\n") != std::string::npos);
  REQUIRE(run_cli({"simulate", "-g", dir / "ring.txt", "--csv", dir / "runs.csv", "--report", dir / "r2.txt"}).code == 0);
  CHECK(slurp(dir / "runs.csv") ==
        "n,levels,method,s_p,s_t,mean_table,mean_hier,mean_short\n"
        "8,2,balanced-b2,1.0625,0.625,5,2.428571429,2.285714286\n"
        "8,1,flat,1,1,8,2.285714286,2.285714286\n");

  auto fit = run_cli({"fit", "-i", dir / "runs.csv", "-m", "linear"});
  REQUIRE(fit.code == 0);
  CHECK(fit.out.find("alpha_hat: 0.0625\n") != std::string::npos);

  REQUIRE(run_cli({"gen", "grid", "4", "4", "-o", dir / "grid.txt"}).code == 0);
  REQUIRE(run_cli({"cluster", "-g", dir / "grid.txt", "-m", "grid-blocks", "--rows", "4", "--cols", "4", "--blocks",
                   "2x2", "-o", dir / "grid.h"})
              .code == 0);
  auto grid = run_cli({"simulate", "-g", dir / "grid.txt", "-H", dir / "grid.h"});
  CHECK(grid.out.find("  s_t: 0.4375\n") != std::string::npos);

  CHECK(run_cli({"gen", "grid", "4"}).code == cli::kDomain);
  CHECK(run_cli({"gen", "hexagon", "4"}).code == cli::kDomain);
  CHECK(run_cli({"simulate", "-g", dir / "missing.txt"}).code == cli::kIo);
  CHECK(run_cli({"cluster", "-g", dir / "ring.txt", "-l", "5", "-b", "2"}).code == cli::kDomain);
}

TEST_CASE("random generation is reproducible") {
  TempDir dir;
  auto a = run_cli({"gen", "random", "30", "-p", "0.2", "--seed", "17", "-o", dir / "a.txt"});
  auto b = run_cli({"gen", "random", "30", "-p", "0.2", "--seed", "17", "-o", dir / "b.txt"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));
  CHECK(a.err.find("seed") != std::string::npos);
  CHECK(load_graph(dir / "a.txt").n_nodes() == 30);
}

TEST_CASE("fit on curve output") {
  TempDir dir;
  REQUIRE(run_cli({"curve", "-N", "10", "--alpha", "0.987", "--step", "0.25", "-o", dir / "c.csv"}).code == 0);
  auto r = run_cli({"fit", "-i", dir / "c.csv", "-m", "eq3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("alpha_hat: 0.98") != std::string::npos);

  REQUIRE(run_cli({"curve", "-N", "10,100", "--step", "0.25", "-o", dir / "mixed.csv"}).code == 0);
  CHECK(run_cli({"fit", "-i", dir / "mixed.csv", "-m", "eq3"}).code == cli::kDomain);
  // the curve's m column doubles as the level count
  CHECK(run_cli({"fit", "-i", dir / "mixed.csv", "-m", "linear"}).code == cli::kOk);
  {
    std::ofstream os(dir / "no_levels.csv");
    os << "s_p,s_t\n1.5,0.5\n";
  }
  CHECK(run_cli({"fit", "-i", dir / "no_levels.csv", "-m", "linear"}).code == cli::kDomain);
  CHECK(run_cli({"fit", "-i", dir / "c.csv", "-m", "quadratic"}).code == cli::kDomain);
}

TEST_CASE("validate") {
  auto ok = run_cli({"validate"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(count(ok.out, "PASS") >= 10);

  CHECK(run_cli({"validate", "--alpha", "0"}).code == cli::kDomain);

  TempDir dir;
  save_graph(make_ring(8), dir / "ring.txt");
  {
    std::ofstream os(dir / "bad.h");
    os << "# levels 3\n0 0 0\n1 0 0\n2 0\n3 1 1\n4 1 1\n5 1 1\n6 1 1\n7 0 0\n";
  }
  auto bad = run_cli({"validate", "-g", dir / "ring.txt", "-H", dir / "bad.h"});
  CHECK(bad.code == cli::kDomain);
  CHECK(bad.out.find("FAIL hierarchy nesting") != std::string::npos);
  CHECK(bad.out.find("node 2") != std::string::npos);
}
