#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fcnet/complexity.hpp"
#include "fcnet/graph.hpp"
#include "fcnet/hcc.hpp"
#include "fcnet/metrics.hpp"
#include "fcnet/topology.hpp"

namespace fcnet::experiment {

/// Target values for the 20-node HCC network.
inline constexpr double kTargetComplexity = 38.31;
inline constexpr double kTargetEnergyEfficiency = 0.61;
inline constexpr double kComplexityRelTolerance = 0.05;
inline constexpr double kEnergyAbsTolerance = 0.02;

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kConfigError = 2,
  kCapacityError = 3,
  kMetricUndefined = 4,
};

/// Maps an exception from the library onto the CLI exit codes.
int exit_code_for(const std::exception& e);

/// A pipeline stage failed; what() names the stage.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message, int exit_code)
      : std::runtime_error("stage '" + stage + "': " + message),
        stage_(std::move(stage)),
        exit_code_(exit_code) {}

  const std::string& stage() const noexcept { return stage_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

struct ExperimentConfig {
  topology::LatticeSpec lattice{4, 5};
  NodeId root = 10;
  std::size_t k = 7;
  complexity::ReachabilityConvention convention{true, complexity::SubgraphFamily::connected_only};
  // When set, the base station is one of the lattice.cells() nodes: the last
  // row-major cell is left out of the sensor field so the functional topology
  // keeps exactly width*height nodes.
  bool bs_counted_in_n = false;
  complexity::Estimator estimator = complexity::ExactEstimator{};
  metrics::EnergyInterpretation energy_interp{metrics::BsLinkWeight::hop_weighted,
                                             metrics::IntraAveraging::per_node};
  std::string out_dir = "out";

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Calibrated defaults for the 4x5 HCC instance.
ExperimentConfig default_config();

/// Throws InvalidArgument on out-of-range ids or bad estimator settings.
void validate(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);
/// Missing keys keep their default_config() value; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Physical sensor field: the lattice, minus its last cell when the base
/// station is counted among the lattice's nodes.
Graph physical_topology(const topology::LatticeSpec& lattice, bool bs_counted_in_n);

NodeId corner_root();
NodeId center_root(const topology::LatticeSpec& lattice);
/// A node id, "corner" or "center".
NodeId parse_root(std::string_view text, const topology::LatticeSpec& lattice);

struct Pipeline {
  Graph physical;
  hcc::BfsTree tree;
  hcc::ClusterAssignment clusters;
  hcc::FunctionalTopology topology;
};

/// make_lattice -> build_bfs_tree -> form_clusters -> build_functional_topology.
Pipeline build_pipeline(const ExperimentConfig& config);

struct ScalabilityRow {
  NodeId parent = 0;
  std::uint32_t depth = 0;
  hcc::MaintenanceCost cost;
};

struct ExperimentReport {
  ExperimentConfig config;
  Pipeline pipeline;
  complexity::ComplexityReport complexity;
  metrics::EnergyBreakdown energy;
  std::vector<ScalabilityRow> scalability;
  std::map<std::string, double> timings_ms;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentReport& report);

/// Checks the structure of a report document; throws ParseError naming the
/// first offending field.
void validate_report_json(const nlohmann::json& j);

/// Writes report.json, curve.csv and topology.txt into config.out_dir. All
/// three are rendered before any file is touched.
void write_outputs(const ExperimentReport& report);

struct CalibrationRow {
  bool include_self = false;
  complexity::SubgraphFamily family = complexity::SubgraphFamily::all_subsets;
  bool bs_counted_in_n = false;
  std::size_t k = 0;
  std::string root_kind;  // "corner" | "center"
  NodeId root = 0;
  metrics::EnergyInterpretation energy_interp;
  std::size_t n = 0;
  std::size_t clusters = 0;
  double c_f = 0.0;
  double energy_efficiency = 0.0;

  double complexity_rel_error() const;
  double energy_abs_error() const;
  /// |C_F - target| / target + |EE - target| / target
  double score() const;
  bool meets_targets() const;
  ExperimentConfig to_config(const topology::LatticeSpec& lattice) const;
};

struct SanityRow {
  std::string graph;  // "complete" | "edgeless"
  std::size_t n = 0;
  complexity::ReachabilityConvention convention;
  double c_f = 0.0;
};

struct CalibrationReport {
  topology::LatticeSpec lattice{4, 5};
  std::vector<CalibrationRow> rows;
  std::vector<SanityRow> sanity;
  std::size_t best = 0;             // index into rows, minimal score
  std::size_t best_complexity = 0;  // minimal |C_F - target|
  std::size_t best_energy = 0;      // minimal |EE - target|
  bool any_meets_targets = false;
  std::string discrepancy;          // empty when some row meets both targets
};

inline const std::vector<std::size_t> kCalibrationK{2, 3, 4, 5, 6, 7, 8};

/// Sweeps include_self x family x bs_counted_in_n x k x root x energy
/// interpretation with the exact estimator. Row order is the sort order of
/// those fields regardless of how the work is scheduled.
CalibrationReport calibrate(const topology::LatticeSpec& lattice = {4, 5});

nlohmann::json to_json(const CalibrationReport& report);
std::string calibration_csv(const CalibrationReport& report);
/// Writes calibration.json, calibration.csv and recommended_config.json.
void write_calibration(const CalibrationReport& report, const std::string& out_dir);

}  // namespace fcnet::experiment
