#include "hstretch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "hstretch/errors.hpp"

namespace hstretch {

namespace {

bool connected_from_zero(const std::vector<std::vector<NodeId>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

std::vector<Edge> dedup_undirected(std::vector<Edge> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Uniform double in [0, 1) from the top 53 bits; fixed across standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n_nodes) {
  if (n_nodes == 0) throw DomainError("graph must have at least one node");
  if (n_nodes > std::numeric_limits<NodeId>::max()) throw DomainError("graph too large");

  for (auto& e : edges_) {
    if (e.first >= n_nodes || e.second >= n_nodes)
      throw DomainError("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                        ") references a node outside 0.." + std::to_string(n_nodes - 1));
    if (e.first == e.second) throw DomainError("self-loop at node " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw DomainError("duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");

  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (!connected_from_zero(adjacency_)) throw DisconnectedGraphError("graph is not connected");
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool induces_connected(const Graph& g, std::span<const NodeId> members) {
  if (members.empty()) return true;
  std::vector<char> inside(g.n_nodes(), 0);
  for (NodeId v : members) inside.at(v) = 1;

  std::vector<char> seen(g.n_nodes(), 0);
  std::vector<NodeId> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  // members may contain duplicates; count distinct ones
  std::size_t distinct = 0;
  for (char c : inside) distinct += c;
  return reached == distinct;
}

Topology parse_topology(const std::string& name) {
  if (name == "ring") return Topology::kRing;
  if (name == "grid") return Topology::kGrid;
  if (name == "torus") return Topology::kTorus;
  if (name == "random") return Topology::kRandom;
  throw DomainError("unknown topology '" + name + "' (expected ring, grid, torus or random)");
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::kRing: return "ring";
    case Topology::kGrid: return "grid";
    case Topology::kTorus: return "torus";
    case Topology::kRandom: return "random";
  }
  return "unknown";
}

Graph make_ring(std::size_t n) {
  if (n < 3) throw DomainError("ring needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph(n, std::move(edges));
}

namespace {

Graph make_lattice(std::size_t rows, std::size_t cols, bool wrap) {
  if (rows < 2 || cols < 2) throw DomainError("grid/torus needs rows >= 2 and cols >= 2");
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      else if (wrap) edges.emplace_back(id(r, c), id(r, 0));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      else if (wrap) edges.emplace_back(id(r, c), id(0, c));
    }
  }
  // A 2-wide torus wraps onto its existing edges.
  return Graph(rows * cols, dedup_undirected(std::move(edges)));
}

}  // namespace

Graph make_grid(std::size_t rows, std::size_t cols) { return make_lattice(rows, cols, false); }
Graph make_torus(std::size_t rows, std::size_t cols) { return make_lattice(rows, cols, true); }

GeneratedGraph generate(const TopologyParams& params) {
  switch (params.topology) {
    case Topology::kRing: return {make_ring(params.n), params.seed, 1};
    case Topology::kGrid: return {make_grid(params.rows, params.cols), params.seed, 1};
    case Topology::kTorus: return {make_torus(params.rows, params.cols), params.seed, 1};
    case Topology::kRandom: break;
  }

  const std::size_t n = params.n;
  const double p = params.edge_probability;
  if (n < 2) throw DomainError("random graph needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("random graph edge probability must lie in (0, 1]");

  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (unit_uniform(rng) < p) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    try {
      return {Graph(n, std::move(edges)), seed, attempt + 1};
    } catch (const DisconnectedGraphError&) {
    }
  }
  throw InfeasibleError("no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample in " +
                        std::to_string(kMaxRandomAttempts) + " attempts from seed " + std::to_string(params.seed));
}

void write_graph(std::ostream& os, const Graph& g) {
  os << "n " << g.n_nodes() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 1) throw ParseError("expected header 'n <count>'", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing text after header", lineno);
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }

    long long u = -1, v = -1;
    if (!(ls >> u >> v)) throw ParseError("expected edge 'u v'", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing text after edge", lineno);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError("node id out of range 0.." + std::to_string(n - 1), lineno);
    if (u == v) throw ParseError("self-loop at node " + std::to_string(u), lineno);
    if (u > v) throw ParseError("edge must be written with u < v", lineno);
    Edge e{static_cast<NodeId>(u), static_cast<NodeId>(v)};
    if (!seen.insert(e).second) throw ParseError("duplicate edge", lineno);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing header 'n <count>'", lineno);
  return Graph(n, std::move(edges));
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write_graph(os, g);
  if (!os) throw IoError("write failed for '" + path.string() + "'");
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  return read_graph(is);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::uint32_t> dist(g.n_nodes(), kUnreachable);
  std::queue<NodeId> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    const NodeId v = q.front();
    q.pop();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_shortest_lengths(const Graph& g) {
  const std::size_t n = g.n_nodes();
  DistanceMatrix m(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s);
    for (NodeId t = 0; t < n; ++t) m.at(s, t) = row[t];
  }
  return m;
}

double DistanceMatrix::mean_distinct() const {
  if (n_ < 2) throw DomainError("mean distance needs at least two nodes");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) total += data_[i * n_ + j];
  return static_cast<double>(total) / static_cast<double>(n_ * (n_ - 1));
}

}  // namespace hstretch
