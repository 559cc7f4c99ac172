#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fcnet/graph.hpp"
#include "fcnet/hcc.hpp"

namespace fcnet::metrics {

/// How each base-station link is weighted in the energy ratio's denominator.
enum class BsLinkWeight : std::uint8_t {
  direct_count,  // each BS-head link counts 1
  hop_weighted,  // 1 + physical hop distance from the head to the tree root
};

/// How the numerator averages intra-cluster tree edges.
enum class IntraAveraging : std::uint8_t {
  per_cluster,  // mean over clusters of intra-cluster tree edges
  per_node,     // mean over sensors of incident intra-cluster tree edges
};

struct EnergyInterpretation {
  BsLinkWeight bs_link_weight = BsLinkWeight::direct_count;
  IntraAveraging averaging = IntraAveraging::per_cluster;

  friend bool operator==(const EnergyInterpretation&, const EnergyInterpretation&) = default;
};

std::string to_string(BsLinkWeight weight);
std::string to_string(IntraAveraging averaging);
std::optional<BsLinkWeight> parse_link_weight(std::string_view text);
std::optional<IntraAveraging> parse_averaging(std::string_view text);

struct EnergyBreakdown {
  double intra_average = 0.0;
  double bs_link_total = 0.0;
  double ratio = 0.0;
};

/// Average intra-cluster connections divided by the total weight of the
/// base-station links, counted on the functional topology's tree edges.
/// Throws UndefinedMetric when there are no cluster-heads.
EnergyBreakdown energy_breakdown(const hcc::FunctionalTopology& ft, const hcc::ClusterAssignment& clusters,
                                 const Graph& physical, const EnergyInterpretation& interp);

double energy_efficiency(const hcc::FunctionalTopology& ft, const hcc::ClusterAssignment& clusters,
                         const Graph& physical, const EnergyInterpretation& interp);

/// Cost of attaching one sensor below `parent`; the inputs are left untouched.
hcc::MaintenanceCost scalability_cost(const hcc::FunctionalTopology& ft, const hcc::BfsTree& tree,
                                      NodeId parent);

}  // namespace fcnet::metrics
