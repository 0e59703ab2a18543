#pragma once

// Hierarchical routing on a (graph, hierarchy) pair.
//
// A node keeps one entry per member of its leaf cluster (itself included) and
// one entry per sibling cluster of each of its ancestors. Forwarding resolves
// a destination to the coarsest level at which it differs from the current
// node and follows the stored next hop toward the nearest member of that unit.
//
// Distances used for next hops are measured inside the enclosing common
// ancestor cluster (the whole graph at the top level). Each hop then strictly
// shrinks the in-scope distance to the target unit, and a route never leaves a
// cluster it has entered, so forwarding cannot loop on a valid hierarchy.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hstretch/graph.hpp"
#include "hstretch/hierarchy.hpp"

namespace hstretch {

// level < levels - 1: `unit` is a cluster id at that label level.
// level == levels - 1: `unit` is a node id inside the owner's leaf cluster.
struct DestinationKey {
  int level;
  std::uint32_t unit;

  friend auto operator<=>(const DestinationKey&, const DestinationKey&) = default;
};

class RoutingTable {
 public:
  explicit RoutingTable(NodeId owner) : owner_(owner) {}

  NodeId owner() const noexcept { return owner_; }
  std::size_t length() const noexcept { return entries_.size(); }
  const std::map<DestinationKey, NodeId>& entries() const noexcept { return entries_; }

  // The self entry maps to the owner; every other next hop is a neighbor.
  void set(DestinationKey key, NodeId next_hop) { entries_[key] = next_hop; }
  const NodeId* find(DestinationKey key) const;

 private:
  NodeId owner_;
  std::map<DestinationKey, NodeId> entries_;
};

// One table per node, indexed by node id. The hierarchy must validate.
std::vector<RoutingTable> build_tables(const Graph& g, const Hierarchy& h);

// The key `at` uses to forward toward `dst`.
DestinationKey resolve_destination(const Hierarchy& h, NodeId at, NodeId dst);

// Node sequence from src to dst inclusive; hop count is size() - 1.
// Throws RoutingLoopError naming the cycle once the hop count exceeds n.
std::vector<NodeId> route(const std::vector<RoutingTable>& tables, const Graph& g, const Hierarchy& h, NodeId src,
                          NodeId dst);

struct StretchReport {
  std::size_t n_nodes = 0;
  int levels = 1;
  std::string method;
  double s_p = 1.0;  // mean_hier_path / mean_shortest_path
  double s_t = 1.0;  // mean_table_length / n_nodes
  double mean_table_length = 0.0;
  double mean_hier_path = 0.0;
  double mean_shortest_path = 0.0;
  double mean_pair_ratio = 1.0;  // mean of per-pair hier/shortest, reported alongside s_p
  std::uint32_t max_hier_path = 0;
  std::map<std::uint32_t, std::uint64_t> hier_path_histogram;  // hop count -> ordered pairs
};

// Routes every ordered pair of distinct nodes. Requires n >= 2.
StretchReport measure(const Graph& g, const Hierarchy& h);

// Structured key-value text with a nested histogram block.
void write_report(std::ostream& os, const StretchReport& r);

// `n,levels,method,s_p,s_t,mean_table,mean_hier,mean_short`
std::string csv_header();
std::string csv_record(const StretchReport& r);

}  // namespace hstretch
