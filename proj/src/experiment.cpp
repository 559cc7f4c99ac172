#include "fcnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "fcnet/errors.hpp"
#include "fcnet/report_io.hpp"

namespace fcnet::experiment {

using nlohmann::json;
namespace fs = std::filesystem;

int exit_code_for(const std::exception& e) {
  if (const auto* s = dynamic_cast<const StageError*>(&e)) return s->exit_code();
  if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
  if (dynamic_cast<const UndefinedMetric*>(&e)) return kMetricUndefined;
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const DisconnectedGraph*>(&e) || dynamic_cast<const json::exception*>(&e)) {
    return kConfigError;
  }
  return kFailure;
}

ExperimentConfig default_config() {
  // Lowest-score row of `fcnet calibrate` on the 4x5 lattice (center root is
  // cell 10). No row matches both target numbers; see README.
  ExperimentConfig c;
  c.lattice = topology::LatticeSpec(4, 5);
  c.root = 10;
  c.k = 7;
  c.convention = {true, complexity::SubgraphFamily::connected_only};
  c.bs_counted_in_n = false;
  c.estimator = complexity::ExactEstimator{};
  c.energy_interp = {metrics::BsLinkWeight::hop_weighted, metrics::IntraAveraging::per_node};
  return c;
}

NodeId corner_root() { return 0; }

NodeId center_root(const topology::LatticeSpec& lattice) {
  return static_cast<NodeId>((lattice.height() / 2) * lattice.width() + lattice.width() / 2);
}

Graph physical_topology(const topology::LatticeSpec& lattice, bool bs_counted_in_n) {
  Graph full = topology::make_lattice(lattice);
  if (!bs_counted_in_n) return full;
  if (lattice.cells() < 2) {
    throw InvalidArgument("a lattice with a counted base station needs at least 2 cells");
  }
  const auto last = static_cast<NodeId>(lattice.cells() - 1);
  Graph g(lattice.cells() - 1);
  for (const auto& e : full.edges()) {
    if (e.v != last) g.add_edge(e.u, e.v);
  }
  return g;
}

NodeId parse_root(std::string_view text, const topology::LatticeSpec& lattice) {
  if (text == "corner") return corner_root();
  if (text == "center") return center_root(lattice);
  NodeId id = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("root must be a node id, 'corner' or 'center', got '" + std::string(text) + "'");
  }
  return id;
}

void validate(const ExperimentConfig& config) {
  const std::size_t sensors = config.lattice.cells() - (config.bs_counted_in_n ? 1 : 0);
  if (sensors == 0) throw InvalidArgument("lattice leaves no sensor nodes");
  if (config.root >= sensors) {
    throw InvalidArgument("root " + std::to_string(config.root) + " out of range for " +
                          std::to_string(sensors) + " sensor nodes");
  }
  if (config.k == 0) throw InvalidArgument("k must be at least 1");
  if (const auto* s = std::get_if<complexity::SampledEstimator>(&config.estimator)) {
    if (s->samples < 2) throw InvalidArgument("sampled estimator needs at least 2 samples");
  }
}

json to_json(const ExperimentConfig& c) {
  return json{
      {"lattice", c.lattice.to_string()},
      {"root", c.root},
      {"k", c.k},
      {"include_self", c.convention.include_self},
      {"family", complexity::to_string(c.convention.family)},
      {"bs_counted_in_n", c.bs_counted_in_n},
      {"estimator", complexity::to_string(c.estimator)},
      {"energy", metrics::to_string(c.energy_interp.bs_link_weight)},
      {"averaging", metrics::to_string(c.energy_interp.averaging)},
      {"out", c.out_dir},
  };
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "config must be a JSON object");
  static const std::set<std::string> known{"lattice", "root",      "k",      "include_self", "family",
                                           "bs_counted_in_n", "estimator", "energy", "averaging", "out"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ParseError(0, "unknown config key '" + key + "'");
  }
  ExperimentConfig c = default_config();
  try {
    if (j.contains("lattice")) c.lattice = topology::LatticeSpec::parse(j["lattice"].get<std::string>());
    if (j.contains("root")) {
      c.root = j["root"].is_string() ? parse_root(j["root"].get<std::string>(), c.lattice) : j["root"].get<NodeId>();
    }
    if (j.contains("k")) c.k = j["k"].get<std::size_t>();
    if (j.contains("include_self")) c.convention.include_self = j["include_self"].get<bool>();
    if (j.contains("family")) {
      auto f = complexity::parse_family(j["family"].get<std::string>());
      if (!f) throw ParseError(0, "family must be 'all' or 'connected'");
      c.convention.family = *f;
    }
    if (j.contains("bs_counted_in_n")) c.bs_counted_in_n = j["bs_counted_in_n"].get<bool>();
    if (j.contains("estimator")) c.estimator = complexity::parse_estimator(j["estimator"].get<std::string>());
    if (j.contains("energy")) {
      auto w = metrics::parse_link_weight(j["energy"].get<std::string>());
      if (!w) throw ParseError(0, "energy must be 'direct' or 'hop'");
      c.energy_interp.bs_link_weight = *w;
    }
    if (j.contains("averaging")) {
      auto a = metrics::parse_averaging(j["averaging"].get<std::string>());
      if (!a) throw ParseError(0, "averaging must be 'cluster' or 'node'");
      c.energy_interp.averaging = *a;
    }
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto stage(const std::string& name, std::map<std::string, double>* timings, F&& body) {
  const auto start = Clock::now();
  auto record = [&] {
    if (timings) {
      (*timings)[name] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
  };
  try {
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record();
    } else {
      auto result = body();
      record();
      return result;
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), exit_code_for(e));
  }
}

Pipeline build_pipeline_timed(const ExperimentConfig& config, std::map<std::string, double>* timings) {
  stage("config", timings, [&] { validate(config); });
  Pipeline p;
  p.physical = stage("physical_topology", timings,
                     [&] { return physical_topology(config.lattice, config.bs_counted_in_n); });
  p.tree = stage("bfs_tree", timings, [&] { return hcc::build_bfs_tree(p.physical, config.root); });
  p.clusters = stage("clusters", timings, [&] { return hcc::form_clusters(p.tree, config.k); });
  p.topology = stage("functional_topology", timings,
                     [&] { return hcc::build_functional_topology(p.tree, p.clusters); });
  return p;
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw InvalidArgument("failed writing '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

}  // namespace

Pipeline build_pipeline(const ExperimentConfig& config) { return build_pipeline_timed(config, nullptr); }

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  const auto start = Clock::now();
  report.pipeline = build_pipeline_timed(config, &report.timings_ms);
  const auto& p = report.pipeline;

  report.complexity = stage("complexity", &report.timings_ms, [&] {
    return complexity::functional_complexity(p.topology.graph, config.convention, config.estimator);
  });
  report.energy = stage("energy_efficiency", &report.timings_ms, [&] {
    return metrics::energy_breakdown(p.topology, p.clusters, p.physical, config.energy_interp);
  });
  report.scalability = stage("scalability", &report.timings_ms, [&] {
    std::vector<ScalabilityRow> rows;
    for (NodeId parent = 0; parent < p.tree.node_count(); ++parent) {
      rows.push_back({parent, p.tree.depth[parent], metrics::scalability_cost(p.topology, p.tree, parent)});
    }
    return rows;
  });
  report.timings_ms["total"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

json to_json(const ExperimentReport& r) {
  const auto& p = r.pipeline;
  json heads = p.topology.head_nodes;
  json sizes = json::array();
  for (auto s : p.clusters.sizes()) sizes.push_back(s);
  json clusters = json::array();
  for (hcc::ClusterId c = 0; c < p.clusters.cluster_count(); ++c) {
    clusters.push_back({{"id", c}, {"head", p.clusters.heads[c]}, {"members", p.clusters.members(c)}});
  }

  json curve = json::array();
  for (const auto& pt : complexity::complexity_curve(r.complexity)) {
    curve.push_back({{"j", pt.j},
                     {"avg_information", pt.avg_information},
                     {"linear_reference", pt.linear_reference},
                     {"abs_difference", pt.abs_difference()}});
  }

  json scal = json::array();
  for (const auto& row : r.scalability) {
    scal.push_back({{"parent", row.parent},
                    {"depth", row.depth},
                    {"new_links", row.cost.new_links},
                    {"notified_nodes", row.cost.notified_nodes}});
  }

  json timings = json::object();
  for (const auto& [k, v] : r.timings_ms) timings[k] = v;

  return json{
      {"schema", "fcnet.experiment/1"},
      {"config", to_json(r.config)},
      {"physical_topology", {{"nodes", p.physical.node_count()}, {"edges", p.physical.edge_count()}}},
      {"bfs_tree", {{"root", p.tree.root}, {"max_depth", p.tree.max_depth()}}},
      {"functional_topology",
       {{"nodes", p.topology.graph.node_count()},
        {"edges", p.topology.graph.edge_count()},
        {"base_station", p.topology.base_station},
        {"cluster_heads", heads},
        {"cluster_sizes", sizes},
        {"clusters", clusters}}},
      {"complexity", complexity::to_json(r.complexity)},
      {"curve", curve},
      {"energy_efficiency",
       {{"ratio", r.energy.ratio},
        {"intra_average", r.energy.intra_average},
        {"bs_link_total", r.energy.bs_link_total}}},
      {"scalability", scal},
      {"timings_ms", timings},
  };
}

namespace {

void require(const std::string& path, bool ok) {
  if (!ok) throw ParseError(0, "report field '" + path + "' missing or of the wrong type");
}

void require_number(const json& obj, const std::string& parent, const std::string& key) {
  require(parent + "." + key, obj.contains(key) && obj[key].is_number());
}

}  // namespace

void validate_report_json(const json& j) {
  require("$", j.is_object());
  require("schema", j.contains("schema") && j["schema"] == "fcnet.experiment/1");
  require("config", j.contains("config") && j["config"].is_object());
  config_from_json(j["config"]);

  for (const char* section : {"physical_topology", "bfs_tree", "functional_topology", "complexity",
                              "energy_efficiency", "timings_ms"}) {
    require(section, j.contains(section) && j[section].is_object());
  }
  require_number(j["physical_topology"], "physical_topology", "nodes");
  require_number(j["physical_topology"], "physical_topology", "edges");
  require_number(j["bfs_tree"], "bfs_tree", "max_depth");
  const auto& ft = j["functional_topology"];
  for (const char* key : {"nodes", "edges", "base_station"}) require_number(ft, "functional_topology", key);
  require("functional_topology.cluster_heads", ft.contains("cluster_heads") && ft["cluster_heads"].is_array());

  try {
    complexity::report_from_json(j["complexity"]);
  } catch (const ParseError& e) {
    throw ParseError(0, std::string("report field 'complexity': ") + e.what());
  }

  require("curve", j.contains("curve") && j["curve"].is_array() && !j["curve"].empty());
  for (const auto& pt : j["curve"]) {
    for (const char* key : {"j", "avg_information", "linear_reference", "abs_difference"}) {
      require_number(pt, "curve[]", key);
      if (key != std::string("j")) require(std::string("curve[].") + key, pt[key].get<double>() >= 0.0);
    }
  }
  for (const char* key : {"ratio", "intra_average", "bs_link_total"}) {
    require_number(j["energy_efficiency"], "energy_efficiency", key);
  }
  require("scalability", j.contains("scalability") && j["scalability"].is_array());
  for (const auto& row : j["scalability"]) {
    for (const char* key : {"parent", "depth", "new_links", "notified_nodes"}) {
      require_number(row, "scalability[]", key);
    }
  }
}

void write_outputs(const ExperimentReport& report) {
  const std::string report_text = to_json(report).dump(2) + "\n";
  const std::string curve_text = complexity::to_csv(report.complexity);
  const std::string topo_text = topology::save_graph(report.pipeline.topology.graph);

  const fs::path dir(report.config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_atomically(dir / "report.json", report_text);
  write_atomically(dir / "curve.csv", curve_text);
  write_atomically(dir / "topology.txt", topo_text);
}

// -- calibration ------------------------------------------------------------

double CalibrationRow::complexity_rel_error() const {
  return std::fabs(c_f - kTargetComplexity) / kTargetComplexity;
}

double CalibrationRow::energy_abs_error() const { return std::fabs(energy_efficiency - kTargetEnergyEfficiency); }

double CalibrationRow::score() const {
  return complexity_rel_error() + energy_abs_error() / kTargetEnergyEfficiency;
}

bool CalibrationRow::meets_targets() const {
  return complexity_rel_error() <= kComplexityRelTolerance && energy_abs_error() <= kEnergyAbsTolerance;
}

ExperimentConfig CalibrationRow::to_config(const topology::LatticeSpec& lattice) const {
  ExperimentConfig c = default_config();
  c.lattice = lattice;
  c.root = root;
  c.k = k;
  c.convention = {include_self, family};
  c.bs_counted_in_n = bs_counted_in_n;
  c.estimator = complexity::ExactEstimator{};
  c.energy_interp = energy_interp;
  return c;
}

CalibrationReport calibrate(const topology::LatticeSpec& lattice) {
  using complexity::ReachabilityConvention;
  using complexity::SubgraphFamily;

  CalibrationReport report;
  report.lattice = lattice;

  const std::vector<bool> flags{false, true};
  const std::vector<SubgraphFamily> families{SubgraphFamily::all_subsets, SubgraphFamily::connected_only};
  const std::vector<std::pair<std::string, NodeId>> roots{{"corner", corner_root()},
                                                          {"center", center_root(lattice)}};
  const std::vector<metrics::EnergyInterpretation> interps{
      {metrics::BsLinkWeight::direct_count, metrics::IntraAveraging::per_cluster},
      {metrics::BsLinkWeight::direct_count, metrics::IntraAveraging::per_node},
      {metrics::BsLinkWeight::hop_weighted, metrics::IntraAveraging::per_cluster},
      {metrics::BsLinkWeight::hop_weighted, metrics::IntraAveraging::per_node},
  };

  // Topologies repeat across k (several bounds give the same clusters), so
  // C_F is computed once per distinct (graph, convention).
  struct Job {
    std::string graph_key;
    ReachabilityConvention conv;
    const Graph* graph;
  };
  std::map<std::pair<bool, std::string>, Pipeline> pipelines;  // (bs_counted, root_kind + k)
  for (bool bs : flags) {
    for (const auto& [kind, root] : roots) {
      for (std::size_t k : kCalibrationK) {
        ExperimentConfig c = default_config();
        c.lattice = lattice;
        c.bs_counted_in_n = bs;
        c.root = root;
        c.k = k;
        pipelines.emplace(std::pair{bs, kind + ":" + std::to_string(k)}, build_pipeline(c));
      }
    }
  }

  std::map<std::pair<std::string, std::pair<bool, int>>, double> cf_cache;
  std::vector<Job> jobs;
  std::set<std::pair<std::string, std::pair<bool, int>>> scheduled;
  for (const auto& [key, p] : pipelines) {
    const std::string gk = topology::save_graph(p.topology.graph);
    for (bool self : flags) {
      for (auto fam : families) {
        auto ck = std::pair{gk, std::pair{self, static_cast<int>(fam)}};
        if (scheduled.insert(ck).second) jobs.push_back({gk, {self, fam}, &p.topology.graph});
      }
    }
  }

  // Each job's result lands in its own slot, so scheduling cannot reorder rows.
  std::vector<double> results(jobs.size(), 0.0);
  {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        results[i] = complexity::functional_complexity(*jobs[i].graph, jobs[i].conv).c_f;
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    cf_cache[{jobs[i].graph_key, {jobs[i].conv.include_self, static_cast<int>(jobs[i].conv.family)}}] = results[i];
  }

  for (bool self : flags) {
    for (auto fam : families) {
      for (bool bs : flags) {
        for (std::size_t k : kCalibrationK) {
          for (const auto& [kind, root] : roots) {
            const auto& p = pipelines.at({bs, kind + ":" + std::to_string(k)});
            const std::string gk = topology::save_graph(p.topology.graph);
            for (const auto& interp : interps) {
              CalibrationRow row;
              row.include_self = self;
              row.family = fam;
              row.bs_counted_in_n = bs;
              row.k = k;
              row.root_kind = kind;
              row.root = root;
              row.energy_interp = interp;
              row.n = p.topology.graph.node_count();
              row.clusters = p.clusters.cluster_count();
              row.c_f = cf_cache.at({gk, {self, static_cast<int>(fam)}});
              row.energy_efficiency = metrics::energy_efficiency(p.topology, p.clusters, p.physical, interp);
              report.rows.push_back(row);
            }
          }
        }
      }
    }
  }

  // Sanity anchors at the instance sizes: complete graphs vanish under
  // include_self, edgeless graphs under exclude_self.
  std::set<std::size_t> sizes;
  for (const auto& row : report.rows) sizes.insert(row.n);
  for (std::size_t n : sizes) {
    for (bool self : flags) {
      ReachabilityConvention all{self, SubgraphFamily::all_subsets};
      ReachabilityConvention conn{self, SubgraphFamily::connected_only};
      report.sanity.push_back({"complete", n, all, complexity::functional_complexity(make_complete(n), all).c_f});
      report.sanity.push_back({"complete", n, conn, complexity::functional_complexity(make_complete(n), conn).c_f});
      report.sanity.push_back({"edgeless", n, all, complexity::functional_complexity(make_edgeless(n), all).c_f});
    }
  }

  auto argmin = [&](auto key) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      if (key(report.rows[i]) < key(report.rows[best])) best = i;
    }
    return best;
  };
  report.best = argmin([](const CalibrationRow& r) { return r.score(); });
  report.best_complexity = argmin([](const CalibrationRow& r) { return r.complexity_rel_error(); });
  report.best_energy = argmin([](const CalibrationRow& r) { return r.energy_abs_error(); });
  report.any_meets_targets =
      std::any_of(report.rows.begin(), report.rows.end(), [](const CalibrationRow& r) { return r.meets_targets(); });

  if (!report.any_meets_targets) {
    const auto& bc = report.rows[report.best_complexity];
    const auto& be = report.rows[report.best_energy];
    std::ostringstream msg;
    msg << "no configuration reproduces both C_F = " << kTargetComplexity << " (within "
        << kComplexityRelTolerance * 100 << "%) and EE = " << kTargetEnergyEfficiency << " (within "
        << kEnergyAbsTolerance << "); closest C_F = " << bc.c_f << " (relative error "
        << bc.complexity_rel_error() << "), closest EE = " << be.energy_efficiency << " (absolute error "
        << be.energy_abs_error() << ")";
    report.discrepancy = msg.str();
  }
  return report;
}

namespace {

json row_json(const CalibrationRow& r) {
  return json{
      {"include_self", r.include_self},
      {"family", complexity::to_string(r.family)},
      {"bs_counted_in_n", r.bs_counted_in_n},
      {"k", r.k},
      {"root_kind", r.root_kind},
      {"root", r.root},
      {"energy", metrics::to_string(r.energy_interp.bs_link_weight)},
      {"averaging", metrics::to_string(r.energy_interp.averaging)},
      {"n", r.n},
      {"clusters", r.clusters},
      {"c_f", r.c_f},
      {"energy_efficiency", r.energy_efficiency},
      {"c_f_rel_error", r.complexity_rel_error()},
      {"ee_abs_error", r.energy_abs_error()},
      {"score", r.score()},
      {"meets_targets", r.meets_targets()},
  };
}

}  // namespace

json to_json(const CalibrationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(row_json(r));
  json sanity = json::array();
  for (const auto& s : report.sanity) {
    sanity.push_back({{"graph", s.graph},
                      {"n", s.n},
                      {"include_self", s.convention.include_self},
                      {"family", complexity::to_string(s.convention.family)},
                      {"c_f", s.c_f}});
  }
  return json{
      {"schema", "fcnet.calibration/1"},
      {"lattice", report.lattice.to_string()},
      {"targets",
       {{"c_f", kTargetComplexity},
        {"energy_efficiency", kTargetEnergyEfficiency},
        {"c_f_rel_tolerance", kComplexityRelTolerance},
        {"ee_abs_tolerance", kEnergyAbsTolerance}}},
      {"row_count", report.rows.size()},
      {"rows", rows},
      {"sanity", sanity},
      {"best", row_json(report.rows.at(report.best))},
      {"best_complexity", row_json(report.rows.at(report.best_complexity))},
      {"best_energy", row_json(report.rows.at(report.best_energy))},
      {"any_meets_targets", report.any_meets_targets},
      {"discrepancy", report.discrepancy.empty() ? json(nullptr) : json(report.discrepancy)},
      {"recommended_config", to_json(report.rows.at(report.best).to_config(report.lattice))},
  };
}

std::string calibration_csv(const CalibrationReport& report) {
  std::ostringstream out;
  out << "include_self,family,bs_counted_in_n,k,root_kind,root,energy,averaging,n,clusters,c_f,"
         "energy_efficiency,score,meets_targets\n";
  char buf[64];
  for (const auto& r : report.rows) {
    out << (r.include_self ? "true" : "false") << ',' << complexity::to_string(r.family) << ','
        << (r.bs_counted_in_n ? "true" : "false") << ',' << r.k << ',' << r.root_kind << ',' << r.root << ','
        << metrics::to_string(r.energy_interp.bs_link_weight) << ','
        << metrics::to_string(r.energy_interp.averaging) << ',' << r.n << ',' << r.clusters << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.c_f);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.energy_efficiency);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.score());
    out << buf << ',' << (r.meets_targets() ? "true" : "false") << '\n';
  }
  return out.str();
}

void write_calibration(const CalibrationReport& report, const std::string& out_dir) {
  const std::string report_text = to_json(report).dump(2) + "\n";
  const std::string csv_text = calibration_csv(report);
  const std::string config_text = to_json(report.rows.at(report.best).to_config(report.lattice)).dump(2) + "\n";
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_atomically(dir / "calibration.json", report_text);
  write_atomically(dir / "calibration.csv", csv_text);
  write_atomically(dir / "recommended_config.json", config_text);
}

}  // namespace fcnet::experiment
