#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcnet/graph.hpp"

namespace fcnet::hcc {

using ClusterId = std::uint32_t;

/// Breadth-first spanning tree. All per-node vectors are indexed by NodeId;
/// parent[root] == root.
struct BfsTree {
  NodeId root = 0;
  std::vector<NodeId> parent;
  std::vector<std::uint32_t> depth;
  std::vector<std::vector<NodeId>> children;  // ascending
  std::vector<std::uint32_t> subtree_size;

  std::size_t node_count() const noexcept { return parent.size(); }
  std::uint32_t max_depth() const;
  /// Tree edges in ascending (u, v) order.
  std::vector<Edge> edges() const;
  /// Nodes in post-order (children before parents, children ascending).
  std::vector<NodeId> post_order() const;
};

/// Level-synchronous BFS: every node at depth d+1 attaches to its lowest-id
/// neighbour at depth d. Throws DisconnectedGraph naming an unreached node.
BfsTree build_bfs_tree(const Graph& graph, NodeId root);

struct ClusterAssignment {
  std::vector<ClusterId> cluster_of;  // indexed by NodeId
  std::vector<NodeId> heads;          // indexed by ClusterId
  std::size_t size_bound_k = 1;

  std::size_t cluster_count() const noexcept { return heads.size(); }
  /// Members of `cluster`, ascending.
  std::vector<NodeId> members(ClusterId cluster) const;
  std::vector<std::size_t> sizes() const;
};

/// Post-order accumulation: each node gathers itself plus the not-yet-clustered
/// remainder of its children's subtrees; once that open set holds at least k
/// nodes it is closed as a cluster headed by the node. Whatever is left open at
/// the root becomes the root's cluster. Cluster ids follow closing order.
ClusterAssignment form_clusters(const BfsTree& tree, std::size_t k);

/// Graph of BFS tree edges plus one link from the base station to each
/// cluster-head. Sensor nodes keep their tree ids; the base station is always
/// the last node (id == sensor count).
struct FunctionalTopology {
  Graph graph;
  NodeId base_station = 0;
  NodeId tree_root = 0;
  std::vector<NodeId> head_nodes;  // ascending

  std::size_t sensor_count() const noexcept { return graph.node_count() - 1; }
};

FunctionalTopology build_functional_topology(const BfsTree& tree, const ClusterAssignment& clusters);

struct MaintenanceCost {
  std::size_t new_links = 0;
  std::size_t notified_nodes = 0;

  friend bool operator==(const MaintenanceCost&, const MaintenanceCost&) = default;
};

struct NodeAddition {
  FunctionalTopology topology;
  BfsTree tree;
  MaintenanceCost cost;
  NodeId new_node = 0;
};

/// Attaches a new sensor below `parent`. The new node takes id == old sensor
/// count and the base station moves to the next id. Only `parent` and its
/// ancestors update their subtree size, so notified_nodes = depth(parent) + 1.
NodeAddition add_node(const FunctionalTopology& ft, const BfsTree& tree, NodeId parent);

}  // namespace fcnet::hcc
