#include "fcnet/metrics.hpp"

#include <limits>
#include <queue>
#include <vector>

#include "fcnet/errors.hpp"

namespace fcnet::metrics {

std::string to_string(BsLinkWeight weight) {
  return weight == BsLinkWeight::direct_count ? "direct" : "hop";
}

std::string to_string(IntraAveraging averaging) {
  return averaging == IntraAveraging::per_cluster ? "cluster" : "node";
}

std::optional<BsLinkWeight> parse_link_weight(std::string_view text) {
  if (text == "direct") return BsLinkWeight::direct_count;
  if (text == "hop") return BsLinkWeight::hop_weighted;
  return std::nullopt;
}

std::optional<IntraAveraging> parse_averaging(std::string_view text) {
  if (text == "cluster") return IntraAveraging::per_cluster;
  if (text == "node") return IntraAveraging::per_node;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> hop_distances(const Graph& g, NodeId source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.node_count(), kInf);
  std::queue<NodeId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

EnergyBreakdown energy_breakdown(const hcc::FunctionalTopology& ft, const hcc::ClusterAssignment& clusters,
                                 const Graph& physical, const EnergyInterpretation& interp) {
  if (ft.head_nodes.empty() || clusters.cluster_count() == 0) {
    throw UndefinedMetric("energy efficiency is undefined without cluster-heads");
  }
  const std::size_t sensors = ft.sensor_count();
  if (clusters.cluster_of.size() != sensors) {
    throw InvalidArgument("cluster assignment does not match the functional topology");
  }

  std::vector<std::size_t> intra(clusters.cluster_count(), 0);
  std::size_t intra_total = 0;
  for (const auto& e : ft.graph.edges()) {
    if (e.u == ft.base_station || e.v == ft.base_station) continue;
    if (clusters.cluster_of[e.u] == clusters.cluster_of[e.v]) {
      ++intra[clusters.cluster_of[e.u]];
      ++intra_total;
    }
  }

  EnergyBreakdown out;
  if (interp.averaging == IntraAveraging::per_cluster) {
    out.intra_average = static_cast<double>(intra_total) / static_cast<double>(clusters.cluster_count());
  } else {
    // each intra edge touches two sensors
    out.intra_average = 2.0 * static_cast<double>(intra_total) / static_cast<double>(sensors);
  }

  if (interp.bs_link_weight == BsLinkWeight::direct_count) {
    out.bs_link_total = static_cast<double>(ft.head_nodes.size());
  } else {
    if (ft.tree_root >= physical.node_count()) {
      throw InvalidArgument("tree root is not a node of the physical topology");
    }
    const auto dist = hop_distances(physical, ft.tree_root);
    double total = 0.0;
    for (NodeId h : ft.head_nodes) {
      if (h >= dist.size() || dist[h] == std::numeric_limits<std::size_t>::max()) {
        throw InvalidArgument("cluster-head " + std::to_string(h) + " not reachable in the physical topology");
      }
      // the root-to-base-station hop is part of every head's path
      total += static_cast<double>(dist[h] + 1);
    }
    out.bs_link_total = total;
  }
  out.ratio = out.intra_average / out.bs_link_total;
  return out;
}

double energy_efficiency(const hcc::FunctionalTopology& ft, const hcc::ClusterAssignment& clusters,
                         const Graph& physical, const EnergyInterpretation& interp) {
  return energy_breakdown(ft, clusters, physical, interp).ratio;
}

hcc::MaintenanceCost scalability_cost(const hcc::FunctionalTopology& ft, const hcc::BfsTree& tree,
                                      NodeId parent) {
  return hcc::add_node(ft, tree, parent).cost;
}

}  // namespace fcnet::metrics
