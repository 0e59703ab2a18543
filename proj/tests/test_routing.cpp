#include <doctest.h>

#include <set>
#include <sstream>

#include "hstretch/errors.hpp"
#include "hstretch/routing.hpp"

using namespace hstretch;

namespace {

// Table length from cluster membership alone: 1 + sum over levels of (visible units - 1).
std::size_t expected_table_length(const Hierarchy& h, NodeId owner) {
  std::size_t len = 1;
  const int m = h.levels;
  for (int j = 0; j < m; ++j) {
    std::set<std::uint32_t> units;
    for (NodeId v = 0; v < h.n_nodes(); ++v) {
      bool in_scope = true;
      for (int k = 0; k < j; ++k) in_scope &= h.label_paths[v][k] == h.label_paths[owner][k];
      if (in_scope) units.insert(j == m - 1 ? v : h.label_paths[v][j]);
    }
    len += units.size() - 1;
  }
  return len;
}

void check_routing_contract(const Graph& g, const Hierarchy& h) {
  const auto tables = build_tables(g, h);
  const auto d = all_pairs_shortest_lengths(g);
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    CHECK(tables[v].length() == expected_table_length(h, v));
    for (const auto& [key, hop] : tables[v].entries())
      CHECK((hop == v ? key == DestinationKey{h.cluster_levels(), v} : g.has_edge(v, hop)));
  }
  for (NodeId s = 0; s < g.n_nodes(); ++s)
    for (NodeId t = 0; t < g.n_nodes(); ++t) {
      if (s == t) continue;
      const auto path = route(tables, g, h, s, t);
      CHECK(path.front() == s);
      CHECK(path.back() == t);
      CHECK(path.size() - 1 <= g.n_nodes());
      CHECK(path.size() - 1 >= d(s, t));
      for (std::size_t i = 1; i < path.size(); ++i) CHECK(g.has_edge(path[i - 1], path[i]));
    }
}

}  // namespace

TEST_CASE("flat tables are shortest-path tables") {
  const Graph g = make_torus(5, 6);
  const Hierarchy h = make_flat(g.n_nodes());
  const auto tables = build_tables(g, h);
  const auto d = all_pairs_shortest_lengths(g);
  for (const auto& t : tables) CHECK(t.length() == g.n_nodes());
  for (NodeId s = 0; s < g.n_nodes(); ++s)
    for (NodeId t = 0; t < g.n_nodes(); ++t)
      if (s != t) CHECK(route(tables, g, h, s, t).size() - 1 == d(s, t));

  const auto r = measure(g, h);
  CHECK(r.s_p == 1.0);
  CHECK(r.s_t == 1.0);
  CHECK(r.mean_pair_ratio == 1.0);
}

TEST_CASE("ring of 8 in two clusters") {
  const Graph g = make_ring(8);
  const Hierarchy h = build_balanced(g, 2, 2);
  const auto tables = build_tables(g, h);
  for (const auto& t : tables) CHECK(t.length() == 5);

  // adjacent nodes in one leaf cluster: one hop
  CHECK(route(tables, g, h, 0, 1) == std::vector<NodeId>{0, 1});
  CHECK(route(tables, g, h, 7, 0) == std::vector<NodeId>{7, 0});

  check_routing_contract(g, h);

  const auto r = measure(g, h);
  CHECK(r.s_t == 0.625);
  CHECK(r.mean_table_length == 5.0);
  CHECK(r.mean_shortest_path == doctest::Approx(16.0 / 7.0));
  // regression fixture, cross-checked by an independent simulation of the forwarding rule
  CHECK(r.s_p == doctest::Approx(17.0 / 16.0).epsilon(1e-15));
  CHECK(r.s_p == doctest::Approx(r.mean_hier_path / r.mean_shortest_path).epsilon(1e-15));

  std::uint64_t pairs = 0;
  for (const auto& [hops, count] : r.hier_path_histogram) pairs += count;
  CHECK(pairs == 56);
}

TEST_CASE("grid 4x4 in four blocks") {
  const Graph g = make_grid(4, 4);
  for (const Hierarchy& h : {build_grid_blocks(g, 4, 4, 2, 2), build_balanced(g, 2, 4)}) {
    const auto tables = build_tables(g, h);
    for (const auto& t : tables) CHECK(t.length() == 7);
    check_routing_contract(g, h);
    CHECK(measure(g, h).s_t == 0.4375);
  }
  CHECK(measure(g, build_grid_blocks(g, 4, 4, 2, 2)).s_p == 1.0);
}

TEST_CASE("delivery on assorted hierarchies") {
  std::vector<std::pair<Graph, Hierarchy>> cases;
  {
    const Graph t = make_torus(16, 16);
    cases.emplace_back(t, build_balanced(t, 4, 2));
    cases.emplace_back(t, build_grid_blocks(t, 16, 16, {{8, 8}, {4, 4}, {2, 2}}));
  }
  {
    const Graph grid = make_grid(6, 9);
    cases.emplace_back(grid, build_balanced(grid, 3, 3));
  }
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    TopologyParams p;
    p.topology = Topology::kRandom;
    p.n = 48;
    p.edge_probability = 0.08;
    p.seed = seed;
    const Graph g = generate(p).graph;
    try {
      cases.emplace_back(g, build_balanced(g, 3, 2));
    } catch (const InfeasibleError&) {
      // sparse random graphs may not admit a balanced connected split
    }
  }
  REQUIRE(cases.size() >= 4);
  for (const auto& [g, h] : cases) check_routing_contract(g, h);
}

TEST_CASE("path stretch grows with height on a torus") {
  const Graph t = make_torus(16, 16);
  const double s1 = measure(t, make_flat(256)).s_p;
  const double s2 = measure(t, build_balanced(t, 2, 4)).s_p;
  const double s3 = measure(t, build_balanced(t, 3, 4)).s_p;
  CHECK(s1 == 1.0);
  CHECK(s2 >= s1);
  CHECK(s3 >= s2);
}

TEST_CASE("table length law for perfectly balanced hierarchies") {
  // 4 levels on 64 nodes with 4 units per level: 1 + 3 * (4 - 1) = m N^(1/m) - m + 1
  const Graph t = make_torus(8, 8);
  const auto tables = build_tables(t, build_grid_blocks(t, 8, 8, {{4, 4}, {2, 2}}));
  for (const auto& tab : tables) CHECK(tab.length() == 3 * 4 - 3 + 1);
}

TEST_CASE("routing errors") {
  const Graph g = make_ring(6);
  const Hierarchy h = build_balanced(g, 2, 2);
  auto tables = build_tables(g, h);
  CHECK_THROWS_AS(route(tables, g, h, 2, 2), DomainError);
  CHECK_THROWS_AS(route(tables, g, h, 0, 9), DomainError);

  // corrupt two tables so that 0 and 1 bounce a packet for 3 between them
  const DestinationKey toward = resolve_destination(h, 0, 3);
  tables[0].set(toward, 1);
  tables[1].set(resolve_destination(h, 1, 3), 0);
  try {
    route(tables, g, h, 0, 3);
    FAIL("expected RoutingLoopError");
  } catch (const RoutingLoopError& e) {
    CHECK(std::string(e.what()).find("cycle 0 1 0") != std::string::npos);
  }

  Hierarchy broken = h;
  broken.label_paths[0] = {1};
  broken.label_paths[3] = {0};
  CHECK_THROWS_AS(build_tables(g, broken), DomainError);
  CHECK_THROWS_AS(measure(Graph(1, {}), make_flat(1)), DomainError);
}

TEST_CASE("report formats") {
  const Graph g = make_ring(8);
  const auto r = measure(g, build_balanced(g, 2, 2));
  CHECK(csv_header() == "n,levels,method,s_p,s_t,mean_table,mean_hier,mean_short");
  CHECK(csv_record(r) == "8,2,balanced-b2,1.0625,0.625,5,2.428571429,2.285714286");

  std::ostringstream os;
  write_report(os, r);
  const std::string text = os.str();
  CHECK(text.find("  s_p: 1.0625\n") != std::string::npos);
  CHECK(text.find("  hier_path_histogram:\n    1: 16\n") != std::string::npos);
}
