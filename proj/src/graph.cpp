#include "fcnet/graph.hpp"

#include <algorithm>
#include <queue>

#include "fcnet/errors.hpp"

namespace fcnet {

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::ordinary:
      return "ordinary";
    case NodeRole::cluster_head:
      return "cluster_head";
    case NodeRole::base_station:
      return "base_station";
  }
  return "ordinary";
}

std::optional<NodeRole> parse_role(std::string_view text) {
  if (text == "ordinary") return NodeRole::ordinary;
  if (text == "cluster_head") return NodeRole::cluster_head;
  if (text == "base_station") return NodeRole::base_station;
  return std::nullopt;
}

Graph::Graph(std::size_t node_count)
    : adjacency_(node_count), roles_(node_count, NodeRole::ordinary) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) : Graph(node_count) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

NodeId Graph::add_node(NodeRole role) {
  if (role == NodeRole::base_station && base_station()) {
    throw InvalidArgument("graph already has a base station");
  }
  adjacency_.emplace_back();
  roles_.push_back(role);
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_node(NodeId n) const {
  if (n >= adjacency_.size()) {
    throw InvalidArgument("node id " + std::to_string(n) + " out of range");
  }
}

void Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) throw InvalidArgument("self-loop on node " + std::to_string(a));
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) {
    throw InvalidArgument("duplicate edge " + std::to_string(std::min(a, b)) + " " +
                          std::to_string(std::max(a, b)));
  }
  na.insert(it, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
}

void Graph::set_role(NodeId n, NodeRole role) {
  check_node(n);
  if (role == NodeRole::base_station) {
    auto bs = base_station();
    if (bs && *bs != n) throw InvalidArgument("graph already has a base station");
  }
  roles_[n] = role;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

const std::vector<NodeId>& Graph::neighbors(NodeId n) const {
  check_node(n);
  return adjacency_[n];
}

NodeRole Graph::role(NodeId n) const {
  check_node(n);
  return roles_[n];
}

std::optional<NodeId> Graph::base_station() const {
  auto it = std::find(roles_.begin(), roles_.end(), NodeRole::base_station);
  if (it == roles_.end()) return std::nullopt;
  return static_cast<NodeId>(it - roles_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::queue<NodeId> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == adjacency_.size();
}

Graph make_path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
  return g;
}

Graph make_cycle(std::size_t n) {
  Graph g = make_path(n);
  if (n >= 3) g.add_edge(0, static_cast<NodeId>(n - 1));
  return g;
}

Graph make_star(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(0, static_cast<NodeId>(i));
  return g;
}

Graph make_complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(k));
  }
  return g;
}

Graph make_edgeless(std::size_t n) { return Graph(n); }

}  // namespace fcnet
