#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hstretch/graph.hpp"

namespace hstretch {

using ClusterId = std::uint32_t;

// m-level nested clustering of a graph's nodes.
//
// Every node carries a label path of m - 1 cluster ids, coarsest first. Ids
// are global within a level: two nodes with the same id at level k are in the
// same level-k cluster. levels == 1 is the flat hierarchy with empty paths.
//
// A Hierarchy is plain data and may be malformed; validate() reports what is
// wrong, and consumers that need a well-formed one call it first.
struct Hierarchy {
  int levels = 1;
  std::vector<std::vector<ClusterId>> label_paths;  // indexed by node id
  std::string method = "flat";

  std::size_t n_nodes() const noexcept { return label_paths.size(); }
  int cluster_levels() const noexcept { return levels - 1; }
  ClusterId leaf_cluster(NodeId v) const { return label_paths.at(v).back(); }

  // Members of each cluster at a label level (0 = coarsest), ascending node ids.
  std::map<ClusterId, std::vector<NodeId>> clusters_at(int level) const;

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

Hierarchy make_flat(std::size_t n_nodes);

// Recursive split: each cluster at every level is cut into `branching`
// connected parts whose sizes differ by at most one. Parts are grown
// breadth-first from the lowest-id untaken node, preferring the
// (depth, id)-smallest frontier node whose removal keeps the untaken rest of
// the cluster connected. Throws InfeasibleError naming the cluster otherwise.
Hierarchy build_balanced(const Graph& g, int levels, int branching);

struct BlockShape {
  std::size_t rows;
  std::size_t cols;
};

// Rectangular tiling of a row-major rows x cols grid or torus. Each shape is
// one cluster level, coarsest first; each must tile the one before it.
Hierarchy build_grid_blocks(const Graph& g, std::size_t grid_rows, std::size_t grid_cols,
                            const std::vector<BlockShape>& shapes);

inline Hierarchy build_grid_blocks(const Graph& g, std::size_t grid_rows, std::size_t grid_cols,
                                   std::size_t block_rows, std::size_t block_cols) {
  return build_grid_blocks(g, grid_rows, grid_cols, {BlockShape{block_rows, block_cols}});
}

struct Violation {
  enum class Rule { kPartition, kNesting, kConnectivity };
  Rule rule;
  int level;  // label level, -1 when not level-specific
  std::int64_t cluster;  // -1 when not cluster-specific
  std::string message;
};

std::string to_string(Violation::Rule r);

// Empty iff paths have the declared length, every level partitions the node
// set, levels nest coarse-to-fine, and every cluster induces a connected subgraph.
std::vector<Violation> validate(const Hierarchy& h, const Graph& g);

// Throws DomainError listing the first violations if validate() is non-empty.
void require_valid(const Hierarchy& h, const Graph& g);

struct HierarchyStats {
  std::vector<std::size_t> clusters_per_level;  // p at each label level, coarsest first
  double mean_leaf_size;  // c; n for the flat hierarchy
  int height;  // h == levels
};

HierarchyStats stats(const Hierarchy& h);

// Text format:
//   # method <tag>
//   # levels <m>
//   <node_id> <path_0> ... <path_{m-2}>     one line per node, ascending ids
// Without a levels comment, m is taken from the first node line.
void write_hierarchy(std::ostream& os, const Hierarchy& h);
Hierarchy read_hierarchy(std::istream& is);
void save_hierarchy(const Hierarchy& h, const std::filesystem::path& path);
Hierarchy load_hierarchy(const std::filesystem::path& path);

}  // namespace hstretch
