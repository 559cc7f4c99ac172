#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcnet {

using NodeId = std::uint32_t;

/// Unordered edge stored as (min, max).
struct Edge {
  NodeId u;
  NodeId v;

  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class NodeRole : std::uint8_t { ordinary, cluster_head, base_station };

std::string_view to_string(NodeRole role);
std::optional<NodeRole> parse_role(std::string_view text);

/// Simple undirected graph on nodes 0..node_count-1 with optional role labels.
///
/// Neighbor lists and the edge list are kept sorted, so every traversal over a
/// Graph is deterministic. Mutators validate their arguments and throw
/// InvalidArgument; once built, a Graph is treated as an immutable value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Appends a node and returns its id.
  NodeId add_node(NodeRole role = NodeRole::ordinary);
  void add_edge(NodeId a, NodeId b);
  void set_role(NodeId n, NodeRole role);

  bool has_edge(NodeId a, NodeId b) const;
  const std::vector<NodeId>& neighbors(NodeId n) const;
  std::size_t degree(NodeId n) const { return neighbors(n).size(); }
  NodeRole role(NodeId n) const;
  std::optional<NodeId> base_station() const;

  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId n) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodeRole> roles_;
  std::size_t edge_count_ = 0;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_edgeless(std::size_t n);

}  // namespace fcnet
