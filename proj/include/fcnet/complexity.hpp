#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fcnet/graph.hpp"

namespace fcnet::complexity {

enum class SubgraphFamily : std::uint8_t { all_subsets, connected_only };

/// How one-hop reachability i_r is counted inside a subgraph, and which
/// size-j node sets the averages run over.
struct ReachabilityConvention {
  bool include_self = false;
  SubgraphFamily family = SubgraphFamily::all_subsets;

  friend bool operator==(const ReachabilityConvention&, const ReachabilityConvention&) = default;
};

std::string to_string(SubgraphFamily family);
std::optional<SubgraphFamily> parse_family(std::string_view text);

/// Largest graph the exact estimator will enumerate (2^24 subsets).
inline constexpr std::size_t kExactNodeLimit = 24;

/// Shannon entropy of a Bernoulli(p) variable in bits; H(0) = H(1) = 0.
double bernoulli_entropy(double p);

/// Sum over subset nodes of H(i_r / j), with i_r the in-subset degree (plus one
/// under include_self) and j = |subset|. Duplicate ids are rejected.
double subgraph_information(const Graph& graph, std::span<const NodeId> subset,
                            const ReachabilityConvention& conv);

/// Mean subgraph information over every size-j member of the subgraph family.
double average_information_exact(const Graph& graph, std::size_t j, const ReachabilityConvention& conv);

struct SampledMean {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo mean over `samples` size-j family members drawn uniformly with
/// replacement. The random stream depends only on (seed, j).
SampledMean average_information_sampled(const Graph& graph, std::size_t j, std::size_t samples,
                                        std::uint64_t seed, const ReachabilityConvention& conv);

struct ExactEstimator {
  friend bool operator==(const ExactEstimator&, const ExactEstimator&) = default;
};

struct SampledEstimator {
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SampledEstimator&, const SampledEstimator&) = default;
};

using Estimator = std::variant<ExactEstimator, SampledEstimator>;

/// "exact" or "sampled:M:SEED".
std::string to_string(const Estimator& estimator);
Estimator parse_estimator(std::string_view text);

struct ComplexityReport {
  std::size_t n = 0;
  std::map<std::size_t, double> avg_information;   // j = 2..n
  std::map<std::size_t, double> linear_reference;  // (j / n) * total_information
  double total_information = 0.0;
  double c_f = 0.0;
  Estimator estimator = ExactEstimator{};
  ReachabilityConvention convention;
  std::optional<std::map<std::size_t, double>> std_error;
};

ComplexityReport functional_complexity(const Graph& graph, const ReachabilityConvention& conv,
                                       const Estimator& estimator = ExactEstimator{});

struct CurvePoint {
  std::size_t j = 0;
  double avg_information = 0.0;
  double linear_reference = 0.0;

  double abs_difference() const;
};

std::vector<CurvePoint> complexity_curve(const ComplexityReport& report);

/// Sum of |avg - linear| over the curve in ascending j, the same reduction
/// functional_complexity uses for c_f.
double sum_abs_differences(std::span<const CurvePoint> curve);

/// Number of size-j members of the family, exact mode only. Useful for
/// checking samplers and connected-subgraph counts.
std::uint64_t family_size(const Graph& graph, std::size_t j, SubgraphFamily family);

}  // namespace fcnet::complexity
