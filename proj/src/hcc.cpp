#include "fcnet/hcc.hpp"

#include <algorithm>
#include <limits>

#include "fcnet/errors.hpp"

namespace fcnet::hcc {

namespace {
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
}

std::uint32_t BfsTree::max_depth() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<Edge> BfsTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent.empty() ? 0 : parent.size() - 1);
  for (NodeId n = 0; n < parent.size(); ++n) {
    if (n != root) out.emplace_back(n, parent[n]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> BfsTree::post_order() const {
  std::vector<NodeId> order;
  order.reserve(parent.size());
  // (node, next child index) stack
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < children[node].size()) {
      NodeId child = children[node][next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

BfsTree build_bfs_tree(const Graph& graph, NodeId root) {
  const std::size_t n = graph.node_count();
  if (root >= n) throw InvalidArgument("root " + std::to_string(root) + " out of range");

  BfsTree tree;
  tree.root = root;
  tree.depth.assign(n, kUnreached);
  tree.parent.assign(n, root);
  tree.children.assign(n, {});
  tree.subtree_size.assign(n, 1);

  tree.depth[root] = 0;
  std::vector<NodeId> frontier{root};
  std::vector<NodeId> order{root};
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId v : graph.neighbors(u)) {
        if (tree.depth[v] == kUnreached) {
          tree.depth[v] = tree.depth[u] + 1;
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (NodeId v : next) {
      // neighbours are sorted, so the first one a level up is the lowest id
      for (NodeId p : graph.neighbors(v)) {
        if (tree.depth[p] + 1 == tree.depth[v]) {
          tree.parent[v] = p;
          break;
        }
      }
      tree.children[tree.parent[v]].push_back(v);
      order.push_back(v);
    }
    frontier = std::move(next);
  }

  for (NodeId v = 0; v < n; ++v) {
    if (tree.depth[v] == kUnreached) {
      throw DisconnectedGraph("graph is disconnected: node " + std::to_string(v) +
                              " is unreachable from root " + std::to_string(root));
    }
  }
  for (auto& c : tree.children) std::sort(c.begin(), c.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != root) tree.subtree_size[tree.parent[*it]] += tree.subtree_size[*it];
  }
  return tree;
}

std::vector<NodeId> ClusterAssignment::members(ClusterId cluster) const {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < cluster_of.size(); ++n) {
    if (cluster_of[n] == cluster) out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> ClusterAssignment::sizes() const {
  std::vector<std::size_t> out(heads.size(), 0);
  for (ClusterId c : cluster_of) ++out[c];
  return out;
}

ClusterAssignment form_clusters(const BfsTree& tree, std::size_t k) {
  if (k == 0) throw InvalidArgument("cluster size bound k must be at least 1");
  const std::size_t n = tree.node_count();
  ClusterAssignment out;
  out.size_bound_k = k;
  out.cluster_of.assign(n, std::numeric_limits<ClusterId>::max());

  std::vector<std::vector<NodeId>> open(n);
  auto close = [&](NodeId head, std::vector<NodeId>& members) {
    auto id = static_cast<ClusterId>(out.heads.size());
    out.heads.push_back(head);
    for (NodeId m : members) out.cluster_of[m] = id;
    members.clear();
  };

  for (NodeId node : tree.post_order()) {
    auto& set = open[node];
    set.push_back(node);
    for (NodeId child : tree.children[node]) {
      set.insert(set.end(), open[child].begin(), open[child].end());
      open[child].clear();
    }
    if (set.size() >= k || node == tree.root) close(node, set);
  }
  return out;
}

namespace {

Graph functional_graph(const BfsTree& tree, const std::vector<NodeId>& heads) {
  const std::size_t sensors = tree.node_count();
  Graph g(sensors);
  for (const auto& e : tree.edges()) g.add_edge(e.u, e.v);
  NodeId bs = g.add_node(NodeRole::base_station);
  for (NodeId h : heads) {
    g.set_role(h, NodeRole::cluster_head);
    g.add_edge(h, bs);
  }
  return g;
}

}  // namespace

FunctionalTopology build_functional_topology(const BfsTree& tree, const ClusterAssignment& clusters) {
  if (clusters.cluster_of.size() != tree.node_count()) {
    throw InvalidArgument("cluster assignment does not match the tree");
  }
  FunctionalTopology ft;
  ft.head_nodes = clusters.heads;
  std::sort(ft.head_nodes.begin(), ft.head_nodes.end());
  ft.graph = functional_graph(tree, ft.head_nodes);
  ft.base_station = static_cast<NodeId>(tree.node_count());
  ft.tree_root = tree.root;
  return ft;
}

NodeAddition add_node(const FunctionalTopology& ft, const BfsTree& tree, NodeId parent) {
  if (parent == ft.base_station) {
    throw InvalidArgument("cannot attach a sensor to the base station");
  }
  if (parent >= tree.node_count()) {
    throw InvalidArgument("parent " + std::to_string(parent) + " is not an existing sensor node");
  }

  NodeAddition out;
  out.tree = tree;
  auto& t = out.tree;
  const auto new_node = static_cast<NodeId>(tree.node_count());
  t.parent.push_back(parent);
  t.depth.push_back(tree.depth[parent] + 1);
  t.children.emplace_back();
  t.children[parent].push_back(new_node);
  t.subtree_size.push_back(1);

  std::size_t notified = 0;
  for (NodeId a = parent;; a = t.parent[a]) {
    ++t.subtree_size[a];
    ++notified;
    if (a == t.root) break;
  }

  out.topology.head_nodes = ft.head_nodes;
  out.topology.graph = functional_graph(t, ft.head_nodes);
  out.topology.base_station = static_cast<NodeId>(t.node_count());
  out.topology.tree_root = t.root;
  out.cost = MaintenanceCost{1, notified};
  out.new_node = new_node;
  return out;
}

}  // namespace fcnet::hcc
