#include "hstretch/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "hstretch/errors.hpp"

namespace hstretch {

std::map<ClusterId, std::vector<NodeId>> Hierarchy::clusters_at(int level) const {
  if (level < 0 || level >= cluster_levels()) throw DomainError("cluster level out of range");
  std::map<ClusterId, std::vector<NodeId>> out;
  for (NodeId v = 0; v < label_paths.size(); ++v) out[label_paths[v].at(level)].push_back(v);
  return out;
}

Hierarchy make_flat(std::size_t n_nodes) {
  return Hierarchy{1, std::vector<std::vector<ClusterId>>(n_nodes), "flat"};
}

namespace {

constexpr long kSplitBudget = 20000;

// Connectivity of the nodes flagged in `avail`, ignoring `skip`.
bool remainder_connected(const Graph& g, const std::vector<char>& avail, std::span<const NodeId> pool, NodeId skip) {
  NodeId start = 0;
  std::size_t total = 0;
  bool found = false;
  for (NodeId v : pool) {
    if (avail[v] && v != skip) {
      if (!found) start = v, found = true;
      ++total;
    }
  }
  if (total <= 1) return true;

  std::vector<char> seen(g.n_nodes(), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (avail[w] && w != skip && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

std::vector<std::uint32_t> depths_within(const Graph& g, const std::vector<char>& avail, NodeId seed) {
  std::vector<std::uint32_t> depth(g.n_nodes(), kUnreachable);
  std::vector<NodeId> frontier{seed};
  depth[seed] = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const NodeId v = frontier[i];
    for (NodeId w : g.neighbors(v)) {
      if (avail[w] && depth[w] == kUnreachable) {
        depth[w] = depth[v] + 1;
        frontier.push_back(w);
      }
    }
  }
  return depth;
}

// Grows a connected part from `seed`, marking taken nodes in `avail`.
// Frontier nodes are ranked by adjacency to the part (more first), then BFS
// depth from the seed, then id; a node is only taken if the untaken rest stays
// connected. Returns fewer than `target` nodes when growth stalls.
std::vector<NodeId> grow_part(const Graph& g, std::vector<char>& avail, std::span<const NodeId> cluster, NodeId seed,
                              std::size_t target) {
  const auto depth = depths_within(g, avail, seed);
  std::vector<NodeId> part{seed};
  avail[seed] = 0;
  std::vector<std::uint32_t> touching(g.n_nodes(), 0);
  // (-touching, depth, id)
  std::set<std::tuple<std::int64_t, std::uint32_t, NodeId>> frontier;
  auto absorb = [&](NodeId v) {
    for (NodeId w : g.neighbors(v)) {
      if (!avail[w]) continue;
      if (touching[w] > 0) frontier.erase({-static_cast<std::int64_t>(touching[w]), depth[w], w});
      ++touching[w];
      frontier.emplace(-static_cast<std::int64_t>(touching[w]), depth[w], w);
    }
  };
  absorb(seed);

  while (part.size() < target) {
    auto pick = frontier.end();
    for (auto it = frontier.begin(); it != frontier.end(); ++it) {
      if (remainder_connected(g, avail, cluster, std::get<2>(*it))) {
        pick = it;
        break;
      }
    }
    if (pick == frontier.end()) break;
    const NodeId v = std::get<2>(*pick);
    frontier.erase(pick);
    avail[v] = 0;
    part.push_back(v);
    absorb(v);
  }
  return part;
}

// Depth-first search over seeds: part i is grown from each viable seed in id
// order until the remaining parts can also be completed. `budget` caps the
// number of grow attempts across the whole search.
bool split_from(const Graph& g, std::vector<char>& avail, std::span<const NodeId> cluster,
                const std::vector<std::size_t>& targets, std::size_t i, std::vector<std::vector<NodeId>>& out,
                long& budget) {
  if (i + 1 == targets.size()) {
    std::vector<NodeId> rest;
    for (NodeId v : cluster)
      if (avail[v]) rest.push_back(v);
    if (!induces_connected(g, rest)) return false;
    out.push_back(std::move(rest));
    return true;
  }

  for (NodeId seed : cluster) {
    if (budget <= 0) return false;
    if (!avail[seed] || !remainder_connected(g, avail, cluster, seed)) continue;
    --budget;
    auto part = grow_part(g, avail, cluster, seed, targets[i]);
    if (part.size() == targets[i]) {
      std::sort(part.begin(), part.end());
      out.push_back(part);
      if (split_from(g, avail, cluster, targets, i + 1, out, budget)) return true;
      out.pop_back();
    }
    for (NodeId v : part) avail[v] = 1;
  }
  return false;
}

std::vector<std::vector<NodeId>> split_connected(const Graph& g, const std::vector<NodeId>& cluster, int parts,
                                                 const std::string& cluster_name) {
  auto infeasible = [&](const std::string& why) {
    return InfeasibleError("cannot split " + cluster_name + " (" + std::to_string(cluster.size()) + " nodes) into " +
                           std::to_string(parts) + " connected parts: " + why);
  };
  if (cluster.size() < static_cast<std::size_t>(parts)) throw infeasible("fewer nodes than parts");

  std::vector<char> avail(g.n_nodes(), 0);
  for (NodeId v : cluster) avail[v] = 1;

  const std::size_t base = cluster.size() / parts;
  const std::size_t extra = cluster.size() % parts;
  std::vector<std::size_t> targets;
  for (int i = 0; i < parts; ++i) targets.push_back(base + (static_cast<std::size_t>(i) < extra ? 1 : 0));

  std::vector<std::vector<NodeId>> out;
  long budget = kSplitBudget;
  if (!split_from(g, avail, cluster, targets, 0, out, budget))
    throw infeasible(budget <= 0 ? "search budget exhausted" : "no balanced connected split found");
  return out;
}

}  // namespace

Hierarchy build_balanced(const Graph& g, int levels, int branching) {
  if (levels < 1) throw DomainError("levels must be >= 1");
  if (branching < 2) throw DomainError("branching must be >= 2");

  const std::size_t n = g.n_nodes();
  std::size_t leaves = 1;
  for (int k = 1; k < levels; ++k) {
    leaves *= static_cast<std::size_t>(branching);
    if (leaves > n)
      throw DomainError("branching^(levels-1) exceeds the node count " + std::to_string(n));
  }

  Hierarchy h = make_flat(n);
  h.levels = levels;
  h.method = levels == 1 ? "flat" : "balanced-b" + std::to_string(branching);

  std::vector<std::vector<NodeId>> current(1);
  for (NodeId v = 0; v < n; ++v) current[0].push_back(v);

  for (int level = 0; level + 1 < levels; ++level) {
    std::vector<std::vector<NodeId>> next;
    for (std::size_t ci = 0; ci < current.size(); ++ci) {
      const std::string name =
          level == 0 ? std::string("the whole graph") : "cluster " + std::to_string(ci) + " at level " + std::to_string(level - 1);
      for (auto& part : split_connected(g, current[ci], branching, name)) {
        const auto id = static_cast<ClusterId>(next.size());
        for (NodeId v : part) h.label_paths[v].push_back(id);
        next.push_back(std::move(part));
      }
    }
    current = std::move(next);
  }
  return h;
}

Hierarchy build_grid_blocks(const Graph& g, std::size_t grid_rows, std::size_t grid_cols,
                            const std::vector<BlockShape>& shapes) {
  if (grid_rows < 2 || grid_cols < 2) throw DomainError("grid dimensions must be >= 2");
  if (g.n_nodes() != grid_rows * grid_cols)
    throw DomainError("graph has " + std::to_string(g.n_nodes()) + " nodes, expected " + std::to_string(grid_rows) +
                      "x" + std::to_string(grid_cols));
  for (const auto& [u, v] : g.edges()) {
    const std::size_t ru = u / grid_cols, cu = u % grid_cols, rv = v / grid_cols, cv = v % grid_cols;
    const bool horizontal = ru == rv && (cv == cu + 1 || (cu == 0 && cv == grid_cols - 1));
    const bool vertical = cu == cv && (rv == ru + 1 || (ru == 0 && rv == grid_rows - 1));
    if (!horizontal && !vertical)
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is not a grid/torus edge");
  }

  std::size_t prev_rows = grid_rows, prev_cols = grid_cols;
  std::string tag = "grid-blocks";
  for (const auto& s : shapes) {
    if (s.rows == 0 || s.cols == 0 || prev_rows % s.rows != 0 || prev_cols % s.cols != 0)
      throw DomainError("block " + std::to_string(s.rows) + "x" + std::to_string(s.cols) + " does not tile " +
                        std::to_string(prev_rows) + "x" + std::to_string(prev_cols));
    prev_rows = s.rows;
    prev_cols = s.cols;
    tag += "-" + std::to_string(s.rows) + "x" + std::to_string(s.cols);
  }

  Hierarchy h = make_flat(g.n_nodes());
  h.levels = static_cast<int>(shapes.size()) + 1;
  h.method = shapes.empty() ? "flat" : tag;
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    const std::size_t r = v / grid_cols, c = v % grid_cols;
    for (const auto& s : shapes) {
      const std::size_t blocks_per_row = grid_cols / s.cols;
      h.label_paths[v].push_back(static_cast<ClusterId>((r / s.rows) * blocks_per_row + c / s.cols));
    }
  }
  return h;
}

std::string to_string(Violation::Rule r) {
  switch (r) {
    case Violation::Rule::kPartition: return "partition";
    case Violation::Rule::kNesting: return "nesting";
    case Violation::Rule::kConnectivity: return "connectivity";
  }
  return "unknown";
}

std::vector<Violation> validate(const Hierarchy& h, const Graph& g) {
  using Rule = Violation::Rule;
  std::vector<Violation> out;

  if (h.levels < 1) {
    out.push_back({Rule::kNesting, -1, -1, "levels must be >= 1, got " + std::to_string(h.levels)});
    return out;
  }
  if (h.n_nodes() != g.n_nodes()) {
    out.push_back({Rule::kPartition, -1, -1,
                   "hierarchy labels " + std::to_string(h.n_nodes()) + " nodes but the graph has " +
                       std::to_string(g.n_nodes())});
    return out;
  }

  const auto expected = static_cast<std::size_t>(h.levels - 1);
  for (NodeId v = 0; v < h.n_nodes(); ++v) {
    if (h.label_paths[v].size() != expected) {
      out.push_back({Rule::kNesting, -1, -1,
                     "label path of node " + std::to_string(v) + " has length " +
                         std::to_string(h.label_paths[v].size()) + ", expected " + std::to_string(expected)});
    }
  }
  if (!out.empty()) return out;

  for (int level = 1; level < h.cluster_levels(); ++level) {
    std::map<ClusterId, ClusterId> parent;
    std::set<ClusterId> reported;
    for (NodeId v = 0; v < h.n_nodes(); ++v) {
      const ClusterId c = h.label_paths[v][level];
      const ClusterId p = h.label_paths[v][level - 1];
      auto [it, inserted] = parent.emplace(c, p);
      if (!inserted && it->second != p && reported.insert(c).second) {
        out.push_back({Rule::kNesting, level, c,
                       "level " + std::to_string(level) + " cluster " + std::to_string(c) +
                           " spans level " + std::to_string(level - 1) + " clusters " + std::to_string(it->second) +
                           " and " + std::to_string(p)});
      }
    }
  }

  for (int level = 0; level < h.cluster_levels(); ++level) {
    for (const auto& [id, members] : h.clusters_at(level)) {
      if (!induces_connected(g, members)) {
        out.push_back({Rule::kConnectivity, level, id,
                       "level " + std::to_string(level) + " cluster " + std::to_string(id) +
                           " does not induce a connected subgraph"});
      }
    }
  }
  return out;
}

void require_valid(const Hierarchy& h, const Graph& g) {
  const auto violations = validate(h, g);
  if (violations.empty()) return;
  std::string msg = "invalid hierarchy (" + std::to_string(violations.size()) + " violations)";
  for (std::size_t i = 0; i < violations.size() && i < 3; ++i) msg += "; " + violations[i].message;
  throw DomainError(msg);
}

HierarchyStats stats(const Hierarchy& h) {
  HierarchyStats s{{}, static_cast<double>(h.n_nodes()), h.levels};
  for (int level = 0; level < h.cluster_levels(); ++level) {
    std::set<ClusterId> ids;
    for (const auto& path : h.label_paths) ids.insert(path.at(level));
    s.clusters_per_level.push_back(ids.size());
  }
  if (!s.clusters_per_level.empty())
    s.mean_leaf_size = static_cast<double>(h.n_nodes()) / static_cast<double>(s.clusters_per_level.back());
  return s;
}

void write_hierarchy(std::ostream& os, const Hierarchy& h) {
  os << "# method " << h.method << '\n';
  os << "# levels " << h.levels << '\n';
  for (NodeId v = 0; v < h.n_nodes(); ++v) {
    os << v;
    for (ClusterId c : h.label_paths[v]) os << ' ' << c;
    os << '\n';
  }
}

Hierarchy read_hierarchy(std::istream& is) {
  Hierarchy h;
  h.method = "file";
  int declared_levels = 0;
  std::map<NodeId, std::vector<ClusterId>> rows;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line.substr(first));
    if (line[first] == '#') {
      std::string hash, key;
      ls >> hash >> key;
      if (key == "method") {
        ls >> h.method;
      } else if (key == "levels") {
        if (!(ls >> declared_levels) || declared_levels < 1) throw ParseError("bad levels comment", lineno);
      }
      continue;
    }

    long long id = -1;
    if (!(ls >> id) || id < 0 || id > std::numeric_limits<NodeId>::max()) throw ParseError("expected node id", lineno);
    std::vector<ClusterId> path;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-' || value > std::numeric_limits<ClusterId>::max())
        throw ParseError("bad cluster id '" + tok + "'", lineno);
      path.push_back(static_cast<ClusterId>(value));
    }
    if (!rows.emplace(static_cast<NodeId>(id), std::move(path)).second)
      throw ParseError("duplicate node id " + std::to_string(id), lineno);
  }

  if (rows.empty()) throw ParseError("no node lines", lineno);
  NodeId expect = 0;
  for (auto& [id, path] : rows) {
    if (id != expect) throw ParseError("node ids must be dense from 0; missing " + std::to_string(expect));
    h.label_paths.push_back(std::move(path));
    ++expect;
  }
  h.levels = declared_levels > 0 ? declared_levels : static_cast<int>(h.label_paths.front().size()) + 1;
  return h;
}

void save_hierarchy(const Hierarchy& h, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write_hierarchy(os, h);
  if (!os) throw IoError("write failed for '" + path.string() + "'");
}

Hierarchy load_hierarchy(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  return read_hierarchy(is);
}

}  // namespace hstretch
