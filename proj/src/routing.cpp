#include "hstretch/routing.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hstretch/errors.hpp"
#include "hstretch/format.hpp"

namespace hstretch {

const NodeId* RoutingTable::find(DestinationKey key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

// BFS distances between every pair of members, through members only.
class ScopedDistances {
 public:
  ScopedDistances(const Graph& g, std::vector<NodeId> members)
      : members_(std::move(members)), local_(g.n_nodes(), -1), dist_(members_.size() * members_.size(), kUnreachable) {
    for (std::size_t i = 0; i < members_.size(); ++i) local_[members_[i]] = static_cast<std::int32_t>(i);

    const std::size_t s = members_.size();
    std::vector<std::size_t> queue;
    queue.reserve(s);
    for (std::size_t src = 0; src < s; ++src) {
      auto* row = &dist_[src * s];
      row[src] = 0;
      queue.assign(1, src);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t v = queue[qi];
        for (NodeId w : g.neighbors(members_[v])) {
          const std::int32_t lw = local_[w];
          if (lw >= 0 && row[lw] == kUnreachable) {
            row[lw] = row[v] + 1;
            queue.push_back(static_cast<std::size_t>(lw));
          }
        }
      }
    }
  }

  const std::vector<NodeId>& members() const noexcept { return members_; }
  bool contains(NodeId v) const { return local_[v] >= 0; }

  std::uint32_t operator()(NodeId u, NodeId v) const {
    return dist_[static_cast<std::size_t>(local_[u]) * members_.size() + static_cast<std::size_t>(local_[v])];
  }

 private:
  std::vector<NodeId> members_;
  std::vector<std::int32_t> local_;
  std::vector<std::uint32_t> dist_;
};

std::uint32_t unit_of(const Hierarchy& h, NodeId v, int level) {
  return level == h.cluster_levels() ? v : h.label_paths[v][level];
}

}  // namespace

DestinationKey resolve_destination(const Hierarchy& h, NodeId at, NodeId dst) {
  const auto& a = h.label_paths.at(at);
  const auto& b = h.label_paths.at(dst);
  for (int level = 0; level < h.cluster_levels(); ++level)
    if (a[level] != b[level]) return {level, b[level]};
  return {h.cluster_levels(), dst};
}

std::vector<RoutingTable> build_tables(const Graph& g, const Hierarchy& h) {
  require_valid(h, g);
  const std::size_t n = g.n_nodes();
  const int leaf_level = h.cluster_levels();

  // scopes[j] holds the scope for entries at level j: the whole graph for
  // j == 0, otherwise one per cluster at label level j - 1.
  std::vector<std::map<ClusterId, ScopedDistances>> scopes(static_cast<std::size_t>(leaf_level) + 1);
  {
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    scopes[0].emplace(0, ScopedDistances(g, std::move(all)));
  }
  for (int j = 1; j <= leaf_level; ++j)
    for (auto& [id, members] : h.clusters_at(j - 1)) scopes[j].emplace(id, ScopedDistances(g, std::move(members)));

  std::vector<RoutingTable> tables;
  tables.reserve(n);
  for (NodeId owner = 0; owner < n; ++owner) {
    RoutingTable table(owner);
    table.set({leaf_level, owner}, owner);

    for (int j = 0; j <= leaf_level; ++j) {
      const ScopedDistances& scope = scopes[j].at(j == 0 ? 0 : h.label_paths[owner][j - 1]);
      const std::uint32_t own_unit = unit_of(h, owner, j);

      // nearest member per sibling unit; members are ascending, so the first
      // strict improvement keeps the lowest id on ties
      std::map<std::uint32_t, std::pair<std::uint32_t, NodeId>> nearest;
      for (NodeId v : scope.members()) {
        const std::uint32_t unit = unit_of(h, v, j);
        if (unit == own_unit) continue;
        const std::uint32_t d = scope(owner, v);
        auto [it, inserted] = nearest.try_emplace(unit, d, v);
        if (!inserted && d < it->second.first) it->second = {d, v};
      }

      for (const auto& [unit, best] : nearest) {
        const auto [d, target] = best;
        NodeId hop = owner;
        for (NodeId w : g.neighbors(owner)) {
          if (scope.contains(w) && scope(w, target) + 1 == d) {
            hop = w;
            break;
          }
        }
        if (hop == owner) throw InfeasibleError("no next hop from " + std::to_string(owner) + " toward " + std::to_string(target));
        table.set({j, unit}, hop);
      }
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

std::vector<NodeId> route(const std::vector<RoutingTable>& tables, const Graph& g, const Hierarchy& h, NodeId src,
                          NodeId dst) {
  const std::size_t n = g.n_nodes();
  if (src >= n || dst >= n) throw DomainError("route endpoint out of range");
  if (src == dst) throw DomainError("route needs src != dst");
  if (tables.size() != n) throw DomainError("routing tables do not match the graph");

  std::vector<NodeId> path{src};
  NodeId at = src;
  while (at != dst) {
    const DestinationKey key = resolve_destination(h, at, dst);
    const NodeId* hop = tables[at].find(key);
    if (hop == nullptr)
      throw DomainError("node " + std::to_string(at) + " has no entry for level " + std::to_string(key.level) +
                        " unit " + std::to_string(key.unit));
    at = *hop;
    path.push_back(at);

    if (path.size() - 1 > n) {
      // find the repeated stretch
      std::vector<std::size_t> first_seen(n, path.size());
      std::size_t begin = 0, end = 0;
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (first_seen[path[i]] != path.size()) {
          begin = first_seen[path[i]];
          end = i;
          break;
        }
        first_seen[path[i]] = i;
      }
      std::ostringstream msg;
      msg << "routing loop from " << src << " to " << dst << ": cycle";
      for (std::size_t i = begin; i <= end; ++i) msg << ' ' << path[i];
      throw RoutingLoopError(msg.str());
    }
  }
  return path;
}

StretchReport measure(const Graph& g, const Hierarchy& h) {
  const std::size_t n = g.n_nodes();
  if (n < 2) throw DomainError("measure needs at least two nodes");

  const auto tables = build_tables(g, h);
  const auto shortest = all_pairs_shortest_lengths(g);

  StretchReport r;
  r.n_nodes = n;
  r.levels = h.levels;
  r.method = h.method;

  std::uint64_t table_total = 0;
  for (const auto& t : tables) table_total += t.length();
  r.mean_table_length = static_cast<double>(table_total) / static_cast<double>(n);
  r.s_t = r.mean_table_length / static_cast<double>(n);

  std::uint64_t hier_total = 0, short_total = 0;
  double ratio_total = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s == d) continue;
      const auto hops = static_cast<std::uint32_t>(route(tables, g, h, s, d).size() - 1);
      const std::uint32_t best = shortest(s, d);
      hier_total += hops;
      short_total += best;
      ratio_total += static_cast<double>(hops) / static_cast<double>(best);
      r.max_hier_path = std::max(r.max_hier_path, hops);
      ++r.hier_path_histogram[hops];
    }
  }
  const auto pairs = static_cast<double>(n * (n - 1));
  r.mean_hier_path = static_cast<double>(hier_total) / pairs;
  r.mean_shortest_path = static_cast<double>(short_total) / pairs;
  r.s_p = static_cast<double>(hier_total) / static_cast<double>(short_total);
  r.mean_pair_ratio = ratio_total / pairs;
  return r;
}

void write_report(std::ostream& os, const StretchReport& r) {
  os << "report:\n"
     << "  n: " << r.n_nodes << '\n'
     << "  levels: " << r.levels << '\n'
     << "  method: " << r.method << '\n'
     << "  s_p: " << format_number(r.s_p) << '\n'
     << "  s_t: " << format_number(r.s_t) << '\n'
     << "  mean_table_length: " << format_number(r.mean_table_length) << '\n'
     << "  mean_hier_path: " << format_number(r.mean_hier_path) << '\n'
     << "  mean_shortest_path: " << format_number(r.mean_shortest_path) << '\n'
     << "  mean_pair_ratio: " << format_number(r.mean_pair_ratio) << '\n'
     << "  max_hier_path: " << r.max_hier_path << '\n'
     << "  hier_path_histogram:\n";
  for (const auto& [hops, count] : r.hier_path_histogram) os << "    " << hops << ": " << count << '\n';
}

std::string csv_header() { return "n,levels,method,s_p,s_t,mean_table,mean_hier,mean_short"; }

std::string csv_record(const StretchReport& r) {
  return std::to_string(r.n_nodes) + ',' + std::to_string(r.levels) + ',' + r.method + ',' + format_number(r.s_p) +
         ',' + format_number(r.s_t) + ',' + format_number(r.mean_table_length) + ',' +
         format_number(r.mean_hier_path) + ',' + format_number(r.mean_shortest_path);
}

}  // namespace hstretch
