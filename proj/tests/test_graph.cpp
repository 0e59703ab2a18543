#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "hstretch/errors.hpp"
#include "hstretch/graph.hpp"

using namespace hstretch;

namespace {

// Floyd-Warshall; test-only oracle for the BFS matrix.
std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.n_nodes();
  const std::uint32_t inf = 1u << 30;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

std::string serialize(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph parse(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace

TEST_CASE("ring") {
  const Graph g = make_ring(8);
  CHECK(g.n_nodes() == 8);
  CHECK(g.n_edges() == 8);
  for (NodeId v = 0; v < 8; ++v) CHECK(g.degree(v) == 2);
  CHECK_THROWS_AS(make_ring(2), DomainError);
}

TEST_CASE("grid and torus edge counts") {
  const Graph grid = make_grid(4, 4);
  CHECK(grid.n_nodes() == 16);
  CHECK(grid.n_edges() == 24);

  const Graph torus = make_torus(4, 4);
  CHECK(torus.n_nodes() == 16);
  CHECK(torus.n_edges() == 32);
  for (NodeId v = 0; v < 16; ++v) CHECK(torus.degree(v) == 4);

  for (std::size_t r = 2; r <= 6; ++r)
    for (std::size_t c = 2; c <= 6; ++c) CHECK(make_grid(r, c).n_edges() == 2 * r * c - r - c);

  // 2-wide tori fold their wrap edges onto the ordinary ones
  CHECK(make_torus(2, 5).n_edges() == 5 + 10);
  CHECK_THROWS_AS(make_grid(1, 4), DomainError);
}

TEST_CASE("graph construction rejects invalid edge sets") {
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), DisconnectedGraphError);
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("random graphs") {
  TopologyParams p;
  p.topology = Topology::kRandom;
  p.n = 40;
  p.edge_probability = 0.12;
  p.seed = 99;
  const auto a = generate(p);
  const auto b = generate(p);
  CHECK(serialize(a.graph) == serialize(b.graph));
  CHECK(a.seed_used >= p.seed);
  CHECK(a.seed_used < p.seed + kMaxRandomAttempts);
  CHECK(a.graph.n_nodes() == 40);

  p.edge_probability = 1.0;
  CHECK(generate(p).graph.n_edges() == 40 * 39 / 2);

  p.n = 200;
  p.edge_probability = 1e-4;
  CHECK_THROWS_AS(generate(p), InfeasibleError);

  p.edge_probability = 0.0;
  CHECK_THROWS_AS(generate(p), DomainError);
}

TEST_CASE("text format") {
  const Graph g = make_torus(3, 4);
  const std::string text = serialize(g);
  CHECK(text.rfind("n 12\n0 1\n0 3\n", 0) == 0);
  CHECK(parse(text) == g);
  CHECK(serialize(parse(text)) == text);

  CHECK(parse("# comment\n\nn 3\n0 1\n# another\n1 2\n") == Graph(3, {{0, 1}, {1, 2}}));

  SUBCASE("errors carry line numbers") {
    try {
      parse("n 6\n0 1\n5 5\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    try {
      parse("n 3\n0 1\n1 7\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\n0 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\n0 1 2\n"), ParseError);
  }

  CHECK_THROWS_AS(parse("n 4\n0 1\n2 3\n"), DisconnectedGraphError);

  SUBCASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "hstretch_graph_roundtrip.txt";
    save_graph(g, path);
    CHECK(load_graph(path) == g);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_graph(path), IoError);
  }
}

TEST_CASE("all-pairs shortest lengths") {
  const Graph ring = make_ring(8);
  const auto d = all_pairs_shortest_lengths(ring);
  CHECK(d(0, 4) == 4);
  CHECK(d.mean_distinct() == doctest::Approx(16.0 / 7.0).epsilon(1e-15));

  SUBCASE("matches Floyd-Warshall on small graphs") {
    std::vector<Graph> graphs{make_ring(5), make_ring(31), make_grid(4, 7), make_torus(5, 5), make_torus(2, 3)};
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      TopologyParams p;
      p.topology = Topology::kRandom;
      p.n = 10 + 3 * seed;
      p.edge_probability = 0.25;
      p.seed = seed;
      graphs.push_back(generate(p).graph);
    }
    for (const auto& g : graphs) {
      const auto bfs = all_pairs_shortest_lengths(g);
      const auto fw = floyd_warshall(g);
      for (NodeId i = 0; i < g.n_nodes(); ++i) {
        CHECK(bfs(i, i) == 0);
        for (NodeId j = 0; j < g.n_nodes(); ++j) {
          CHECK(bfs(i, j) == fw[i][j]);
          CHECK(bfs(i, j) == bfs(j, i));
        }
      }
    }
  }
}
