#include "fcnet/complexity.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "fcnet/errors.hpp"

namespace fcnet::complexity {

std::string to_string(SubgraphFamily family) {
  return family == SubgraphFamily::all_subsets ? "all" : "connected";
}

std::optional<SubgraphFamily> parse_family(std::string_view text) {
  if (text == "all" || text == "all_subsets") return SubgraphFamily::all_subsets;
  if (text == "connected" || text == "connected_only") return SubgraphFamily::connected_only;
  return std::nullopt;
}

double bernoulli_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("probability must lie in [0, 1], got " + std::to_string(p));
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  const double q = 1.0 - p;
  return -p * std::log2(p) - q * std::log2(q);
}

double subgraph_information(const Graph& graph, std::span<const NodeId> subset,
                            const ReachabilityConvention& conv) {
  if (subset.empty()) throw InvalidArgument("subgraph information of an empty subset");
  std::vector<bool> member(graph.node_count(), false);
  for (NodeId n : subset) {
    if (n >= graph.node_count()) throw InvalidArgument("node id " + std::to_string(n) + " out of range");
    if (member[n]) throw InvalidArgument("node " + std::to_string(n) + " listed twice in subset");
    member[n] = true;
  }
  const auto j = static_cast<double>(subset.size());
  double total = 0.0;
  for (NodeId n : subset) {
    std::size_t reach = conv.include_self ? 1 : 0;
    for (NodeId v : graph.neighbors(n)) reach += member[v] ? 1 : 0;
    total += bernoulli_entropy(static_cast<double>(reach) / j);
  }
  return total;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& graph) {
  std::vector<Mask> adj(graph.node_count(), 0);
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    for (NodeId v : graph.neighbors(n)) adj[n] |= Mask{1} << v;
  }
  return adj;
}

bool mask_connected(Mask m, const std::vector<Mask>& adj) {
  Mask seen = m & (~m + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & m & ~seen;
    seen |= frontier;
  }
  return seen == m;
}

// Integer counts behind every exact average: members[j] is the number of
// size-j family members; reach[j][r] counts (member, node) pairs where the
// node has reachability r. Integer sums make the result independent of how
// the mask range is split across threads.
struct Tally {
  std::size_t n = 0;
  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> reach;

  explicit Tally(std::size_t nodes)
      : n(nodes), members(nodes + 1, 0), reach((nodes + 1) * (nodes + 2), 0) {}

  std::uint64_t& at(std::size_t j, std::size_t r) { return reach[j * (n + 2) + r]; }
  std::uint64_t at(std::size_t j, std::size_t r) const { return reach[j * (n + 2) + r]; }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < members.size(); ++i) members[i] += other.members[i];
    for (std::size_t i = 0; i < reach.size(); ++i) reach[i] += other.reach[i];
  }

  double average(std::size_t j) const {
    double sum = 0.0;
    for (std::size_t r = 0; r <= j; ++r) {
      const auto count = at(j, r);
      if (count != 0) {
        sum += static_cast<double>(count) *
               bernoulli_entropy(static_cast<double>(r) / static_cast<double>(j));
      }
    }
    return sum / static_cast<double>(members[j]);
  }
};

struct MaskCounter {
  const std::vector<Mask>& adj;
  SubgraphFamily family;
  std::size_t self;
  bool members_only;

  void operator()(Mask m, Tally& tally) const {
    const auto j = static_cast<std::size_t>(std::popcount(m));
    if (family == SubgraphFamily::connected_only && !mask_connected(m, adj)) return;
    ++tally.members[j];
    if (members_only) return;
    for (Mask t = m; t != 0; t &= t - 1) {
      const auto node = std::countr_zero(t);
      tally.at(j, static_cast<std::size_t>(std::popcount(adj[node] & m)) + self)++;
    }
  }
};

void check_exact_capacity(const Graph& graph) {
  if (graph.node_count() > kExactNodeLimit) {
    throw CapacityError("exact enumeration supports at most " + std::to_string(kExactNodeLimit) +
                        " nodes, graph has " + std::to_string(graph.node_count()) +
                        "; use the sampled estimator");
  }
}

unsigned worker_count(Mask range) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (range < (Mask{1} << 14)) return 1;
  return hw;
}

// All subsets with at least two nodes.
Tally tally_all_sizes(const Graph& graph, const ReachabilityConvention& conv) {
  check_exact_capacity(graph);
  const std::size_t n = graph.node_count();
  const auto adj = adjacency_masks(graph);
  const MaskCounter count{adj, conv.family, conv.include_self ? 1u : 0u, false};
  const Mask end = Mask{1} << n;
  const unsigned workers = worker_count(end);

  std::vector<Tally> partial(workers, Tally(n));
  auto run = [&](unsigned w) {
    const Mask lo = end / workers * w;
    const Mask hi = w + 1 == workers ? end : end / workers * (w + 1);
    for (Mask m = lo; m < hi; ++m) {
      if (std::popcount(m) >= 2) count(m, partial[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Tally total(n);
  for (const auto& p : partial) total.merge(p);
  return total;
}

// Visits every n-bit mask with exactly j bits set, ascending (Gosper's hack).
template <typename F>
void for_each_combination(std::size_t n, std::size_t j, F&& visit) {
  if (j == 0 || j > n) return;
  const Mask limit = Mask{1} << n;
  Mask m = (j == 64) ? ~Mask{0} : (Mask{1} << j) - 1;
  while (m < limit) {
    visit(m);
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
}

Tally tally_one_size(const Graph& graph, std::size_t j, const ReachabilityConvention& conv,
                     bool members_only = false) {
  check_exact_capacity(graph);
  const auto adj = adjacency_masks(graph);
  const MaskCounter count{adj, conv.family, conv.include_self ? 1u : 0u, members_only};
  Tally tally(graph.node_count());
  for_each_combination(graph.node_count(), j, [&](Mask m) { count(m, tally); });
  return tally;
}

void check_size(const Graph& graph, std::size_t j) {
  if (j < 2 || j > graph.node_count()) {
    throw InvalidArgument("subgraph size j=" + std::to_string(j) + " outside [2, " +
                          std::to_string(graph.node_count()) + "]");
  }
}

std::vector<NodeId> mask_to_nodes(Mask m) {
  std::vector<NodeId> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<NodeId>(std::countr_zero(m)));
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection keeps the draw unbiased and the stream portable
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::mt19937_64 stream_for(std::uint64_t seed, std::size_t j) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(j), 0x6663u};
  return std::mt19937_64(seq);
}

// Draws size-j family members, uniformly and with replacement.
class SubsetSampler {
 public:
  SubsetSampler(const Graph& graph, std::size_t j, SubgraphFamily family, std::uint64_t seed)
      : graph_(graph), j_(j), family_(family), rng_(stream_for(seed, j)) {
    pool_.resize(graph.node_count());
    std::iota(pool_.begin(), pool_.end(), NodeId{0});
    if (family_ == SubgraphFamily::connected_only && graph.node_count() <= kExactNodeLimit) {
      const auto adj = adjacency_masks(graph);
      for_each_combination(graph.node_count(), j, [&](Mask m) {
        if (mask_connected(m, adj)) connected_.push_back(m);
      });
      if (connected_.empty()) {
        throw InvalidArgument("no connected subgraph with " + std::to_string(j) + " nodes");
      }
    }
  }

  std::vector<NodeId> draw() {
    if (family_ == SubgraphFamily::all_subsets) return draw_any();
    if (!connected_.empty()) return mask_to_nodes(connected_[uniform_below(rng_, connected_.size())]);
    return draw_connected_by_rejection();
  }

 private:
  std::vector<NodeId> draw_any() {
    const std::size_t n = pool_.size();
    for (std::size_t i = 0; i < j_; ++i) {
      std::swap(pool_[i], pool_[i + uniform_below(rng_, n - i)]);
    }
    std::vector<NodeId> out(pool_.begin(), pool_.begin() + static_cast<std::ptrdiff_t>(j_));
    // ascending, so equal subsets always sum in the same order
    std::sort(out.begin(), out.end());
    return out;
  }

  bool connected(const std::vector<NodeId>& nodes) const {
    std::vector<bool> member(graph_.node_count(), false);
    std::vector<bool> seen(graph_.node_count(), false);
    for (NodeId n : nodes) member[n] = true;
    std::vector<NodeId> stack{nodes.front()};
    seen[nodes.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : graph_.neighbors(u)) {
        if (member[v] && !seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    return reached == nodes.size();
  }

  std::vector<NodeId> draw_connected_by_rejection() {
    constexpr std::size_t kAttempts = 1'000'000;
    for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
      auto nodes = draw_any();
      if (connected(nodes)) return nodes;
    }
    throw InvalidArgument("could not draw a connected subgraph with " + std::to_string(j_) +
                          " nodes after " + std::to_string(kAttempts) + " attempts");
  }

  const Graph& graph_;
  std::size_t j_;
  SubgraphFamily family_;
  std::mt19937_64 rng_;
  std::vector<NodeId> pool_;
  std::vector<Mask> connected_;
};

}  // namespace

double average_information_exact(const Graph& graph, std::size_t j, const ReachabilityConvention& conv) {
  check_size(graph, j);
  const Tally tally = tally_one_size(graph, j, conv);
  if (tally.members[j] == 0) {
    throw InvalidArgument("no connected subgraph with " + std::to_string(j) + " nodes");
  }
  return tally.average(j);
}

SampledMean average_information_sampled(const Graph& graph, std::size_t j, std::size_t samples,
                                        std::uint64_t seed, const ReachabilityConvention& conv) {
  check_size(graph, j);
  if (samples < 2) throw InvalidArgument("sampled estimator needs at least 2 samples");
  SubsetSampler sampler(graph, j, conv.family, seed);

  // Welford: a constant stream keeps mean == value and variance == 0 exactly.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double x = subgraph_information(graph, sampler.draw(), conv);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (x - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(std::max(variance, 0.0) / static_cast<double>(samples))};
}

std::string to_string(const Estimator& estimator) {
  if (const auto* s = std::get_if<SampledEstimator>(&estimator)) {
    return "sampled:" + std::to_string(s->samples) + ":" + std::to_string(s->seed);
  }
  return "exact";
}

Estimator parse_estimator(std::string_view text) {
  if (text == "exact") return ExactEstimator{};
  auto bad = [&] {
    return InvalidArgument("estimator must be 'exact' or 'sampled:M:SEED', got '" + std::string(text) + "'");
  };
  constexpr std::string_view prefix = "sampled:";
  if (!text.starts_with(prefix)) throw bad();
  auto rest = text.substr(prefix.size());
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw bad();
  SampledEstimator s;
  auto parse = [&](std::string_view part, auto& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) throw bad();
  };
  parse(rest.substr(0, colon), s.samples);
  parse(rest.substr(colon + 1), s.seed);
  if (s.samples < 2) throw InvalidArgument("sampled estimator needs at least 2 samples");
  return s;
}

ComplexityReport functional_complexity(const Graph& graph, const ReachabilityConvention& conv,
                                       const Estimator& estimator) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw InvalidArgument("functional complexity needs at least 2 nodes");
  if (conv.family == SubgraphFamily::connected_only && !graph.is_connected()) {
    throw DisconnectedGraph("connected-only family requires a connected graph");
  }

  ComplexityReport report;
  report.n = n;
  report.estimator = estimator;
  report.convention = conv;

  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  report.total_information = subgraph_information(graph, all, conv);

  if (std::holds_alternative<ExactEstimator>(estimator)) {
    const Tally tally = tally_all_sizes(graph, conv);
    for (std::size_t j = 2; j < n; ++j) report.avg_information[j] = tally.average(j);
  } else {
    const auto& s = std::get<SampledEstimator>(estimator);
    if (s.samples < 2) throw InvalidArgument("sampled estimator needs at least 2 samples");
    std::vector<SampledMean> means(n + 1);
    const std::size_t sizes = n >= 3 ? n - 2 : 0;
    const unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                static_cast<unsigned>(std::max<std::size_t>(sizes, 1)));
    auto run = [&](unsigned w) {
      for (std::size_t j = 2 + w; j < n; j += workers) {
        means[j] = average_information_sampled(graph, j, s.samples, s.seed, conv);
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    report.std_error.emplace();
    for (std::size_t j = 2; j < n; ++j) {
      report.avg_information[j] = means[j].mean;
      (*report.std_error)[j] = means[j].std_error;
    }
    (*report.std_error)[n] = 0.0;
  }
  // the full node set is the only size-n member
  report.avg_information[n] = report.total_information;

  for (std::size_t j = 2; j <= n; ++j) {
    report.linear_reference[j] =
        static_cast<double>(j) / static_cast<double>(n) * report.total_information;
  }
  const auto curve = complexity_curve(report);
  report.c_f = sum_abs_differences(curve);
  return report;
}

double CurvePoint::abs_difference() const { return std::fabs(avg_information - linear_reference); }

std::vector<CurvePoint> complexity_curve(const ComplexityReport& report) {
  std::vector<CurvePoint> curve;
  curve.reserve(report.avg_information.size());
  for (const auto& [j, avg] : report.avg_information) {
    auto it = report.linear_reference.find(j);
    if (it == report.linear_reference.end()) {
      throw InvalidArgument("report has no linear reference for j=" + std::to_string(j));
    }
    curve.push_back({j, avg, it->second});
  }
  return curve;
}

double sum_abs_differences(std::span<const CurvePoint> curve) {
  double sum = 0.0;
  for (const auto& p : curve) sum += p.abs_difference();
  return sum;
}

std::uint64_t family_size(const Graph& graph, std::size_t j, SubgraphFamily family) {
  check_size(graph, j);
  return tally_one_size(graph, j, {false, family}, true).members[j];
}

}  // namespace fcnet::complexity
