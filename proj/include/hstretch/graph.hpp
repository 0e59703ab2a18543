#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hstretch {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // always first < second

// Simple, undirected, unweighted, connected graph with dense ids 0..n-1.
// Immutable after construction.
class Graph {
 public:
  // Validates the edge list (range, self-loops, duplicates) and connectivity.
  // Edges may be given in either orientation and any order.
  Graph(std::size_t n_nodes, std::vector<Edge> edges);

  std::size_t n_nodes() const noexcept { return adjacency_.size(); }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }

  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.n_nodes() == b.n_nodes(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// True when the subgraph induced by `members` is connected (empty counts as connected).
bool induces_connected(const Graph& g, std::span<const NodeId> members);

enum class Topology { kRing, kGrid, kTorus, kRandom };

Topology parse_topology(const std::string& name);
std::string to_string(Topology t);

struct TopologyParams {
  Topology topology = Topology::kRing;
  std::size_t n = 0;     // ring, random
  std::size_t rows = 0;  // grid, torus
  std::size_t cols = 0;
  double edge_probability = 0.0;  // random
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  std::uint64_t seed_used;  // differs from the requested seed after rejected random samples
  int attempts;
};

inline constexpr int kMaxRandomAttempts = 100;

// Grid and torus nodes are numbered row-major: id = r * cols + c.
// Random graphs are G(n, p); disconnected samples are rejected and the seed
// advanced by one, up to kMaxRandomAttempts draws.
GeneratedGraph generate(const TopologyParams& params);

Graph make_ring(std::size_t n);
Graph make_grid(std::size_t rows, std::size_t cols);
Graph make_torus(std::size_t rows, std::size_t cols);

// Text format:
//   n <count>
//   u v        one line per edge, u < v, sorted
// Lines starting with '#' and blank lines are ignored on read.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
void save_graph(const Graph& g, const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);

// Hop-count matrix, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(NodeId u, NodeId v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint32_t& at(NodeId u, NodeId v) { return data_[static_cast<std::size_t>(u) * n_ + v]; }

  // Mean over ordered pairs of distinct nodes.
  double mean_distinct() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> data_;
};

inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

// Breadth-first distances from `source`; kUnreachable where no path exists.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

DistanceMatrix all_pairs_shortest_lengths(const Graph& g);

}  // namespace hstretch
