// fcnet: functional complexity of HCC clustering on lattice sensor networks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcnet/errors.hpp"
#include "fcnet/experiment.hpp"
#include "fcnet/report_io.hpp"
#include "fcnet/topology.hpp"

using namespace fcnet;
using nlohmann::json;

namespace {

struct RunFlags {
  std::string config_path;
  std::string grid;
  std::string root;
  std::optional<std::size_t> k;
  bool include_self = false;
  bool exclude_self = false;
  std::string family;
  std::string estimator;
  std::string energy;
  std::string averaging;
  bool bs_in_n = false;
  bool bs_extra = false;
  std::string out;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
  cmd->add_option("--grid", f.grid, "lattice as WxH (default 4x5)");
  cmd->add_option("--root", f.root, "BFS root: node id, corner or center");
  cmd->add_option("--k", f.k, "cluster size bound");
  auto* inc = cmd->add_flag("--include-self", f.include_self, "count a node in its own reachability");
  auto* exc = cmd->add_flag("--exclude-self", f.exclude_self, "reachability is the in-subset degree");
  inc->excludes(exc);
  cmd->add_option("--family", f.family, "subgraph family")->check(CLI::IsMember({"all", "connected"}));
  cmd->add_option("--estimator", f.estimator, "exact | sampled:M:SEED");
  cmd->add_option("--energy", f.energy, "base-station link weight")->check(CLI::IsMember({"direct", "hop"}));
  cmd->add_option("--averaging", f.averaging, "intra-cluster averaging")->check(CLI::IsMember({"cluster", "node"}));
  auto* bs_in = cmd->add_flag("--bs-in-n", f.bs_in_n, "base station is one of the WxH nodes");
  auto* bs_ex = cmd->add_flag("--bs-extra", f.bs_extra, "base station is added beyond the WxH nodes");
  bs_in->excludes(bs_ex);
  cmd->add_option("--out", f.out, "output directory");
}

experiment::ExperimentConfig resolve(const RunFlags& f) {
  experiment::ExperimentConfig c = experiment::default_config();
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw InvalidArgument("cannot open config '" + f.config_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(0, f.config_path + ": " + e.what());
    }
    c = experiment::config_from_json(j);
  }
  if (!f.grid.empty()) c.lattice = topology::LatticeSpec::parse(f.grid);
  if (!f.root.empty()) c.root = experiment::parse_root(f.root, c.lattice);
  if (f.k) c.k = *f.k;
  if (f.include_self) c.convention.include_self = true;
  if (f.exclude_self) c.convention.include_self = false;
  if (!f.family.empty()) c.convention.family = *complexity::parse_family(f.family);
  if (!f.estimator.empty()) c.estimator = complexity::parse_estimator(f.estimator);
  if (!f.energy.empty()) c.energy_interp.bs_link_weight = *metrics::parse_link_weight(f.energy);
  if (!f.averaging.empty()) c.energy_interp.averaging = *metrics::parse_averaging(f.averaging);
  if (f.bs_in_n) c.bs_counted_in_n = true;
  if (f.bs_extra) c.bs_counted_in_n = false;
  if (!f.out.empty()) c.out_dir = f.out;
  experiment::validate(c);
  return c;
}

int cmd_run(const RunFlags& flags) {
  auto config = resolve(flags);
  auto report = experiment::run_experiment(config);
  experiment::write_outputs(report);
  std::cout << "N=" << report.complexity.n << " C_F=" << report.complexity.c_f
            << " EE=" << report.energy.ratio << " clusters=" << report.pipeline.clusters.cluster_count()
            << "\nwrote " << config.out_dir << "/{report.json,curve.csv,topology.txt}\n";
  return 0;
}

int cmd_calibrate(const std::string& grid, const std::string& out) {
  auto report = experiment::calibrate(topology::LatticeSpec::parse(grid));
  experiment::write_calibration(report, out);
  const auto& best = report.rows[report.best];
  std::cout << report.rows.size() << " configurations\n"
            << "best: include_self=" << best.include_self << " family=" << complexity::to_string(best.family)
            << " bs_counted_in_n=" << best.bs_counted_in_n << " k=" << best.k << " root=" << best.root_kind
            << " energy=" << metrics::to_string(best.energy_interp.bs_link_weight) << "/"
            << metrics::to_string(best.energy_interp.averaging) << "  C_F=" << best.c_f
            << " EE=" << best.energy_efficiency << "\n";
  if (!report.discrepancy.empty()) std::cout << "DISCREPANCY: " << report.discrepancy << "\n";
  std::cout << "wrote " << out << "/{calibration.json,calibration.csv,recommended_config.json}\n";
  return 0;
}

int cmd_graph_load(const std::string& path, bool with_complexity, const RunFlags& flags) {
  Graph g = topology::load_graph_file(path);
  json summary{{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"connected", g.is_connected()}};
  json heads = json::array();
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (g.role(n) == NodeRole::cluster_head) heads.push_back(n);
  }
  summary["cluster_heads"] = heads;
  auto bs = g.base_station();
  summary["base_station"] = bs ? json(*bs) : json(nullptr);
  if (with_complexity) {
    auto c = resolve(flags);
    summary["complexity"] = complexity::to_json(complexity::functional_complexity(g, c.convention, c.estimator));
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_graph_dump(const std::string& path, const RunFlags& flags) {
  auto config = resolve(flags);
  auto pipeline = experiment::build_pipeline(config);
  topology::save_graph_file(pipeline.topology.graph, path);
  std::cout << "wrote functional topology (" << pipeline.topology.graph.node_count() << " nodes, "
            << pipeline.topology.graph.edge_count() << " edges) to " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional complexity, energy efficiency and scalability of HCC clustering"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "run the full pipeline and write reports");
  add_run_flags(run, run_flags);

  std::string cal_out = "calibration";
  std::string cal_grid = "4x5";
  auto* cal = app.add_subcommand("calibrate", "sweep the convention grid against the target numbers");
  cal->add_option("--out", cal_out, "output directory");
  cal->add_option("--grid", cal_grid, "lattice as WxH");

  auto* graph = app.add_subcommand("graph", "edge-list utilities");
  graph->require_subcommand(1);
  std::string dump_path;
  RunFlags dump_flags;
  auto* dump = graph->add_subcommand("dump", "write the functional topology of a config");
  dump->add_option("path", dump_path, "output edge-list file")->required();
  add_run_flags(dump, dump_flags);
  std::string load_path;
  bool load_complexity = false;
  RunFlags load_flags;
  auto* load = graph->add_subcommand("load", "parse an edge-list file and print a summary");
  load->add_option("path", load_path, "edge-list file")->required();
  load->add_flag("--complexity", load_complexity, "also compute C_F of the loaded graph");
  add_run_flags(load, load_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : experiment::kConfigError;
  }

  try {
    if (*run) return cmd_run(run_flags);
    if (*cal) return cmd_calibrate(cal_grid, cal_out);
    if (*dump) return cmd_graph_dump(dump_path, dump_flags);
    if (*load) return cmd_graph_load(load_path, load_complexity, load_flags);
  } catch (const std::exception& e) {
    std::cerr << "fcnet: " << e.what() << "\n";
    return experiment::exit_code_for(e);
  }
  return experiment::kFailure;
}
