#include "fcnet/topology.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fcnet/errors.hpp"

namespace fcnet::topology {

LatticeSpec::LatticeSpec(std::size_t width, std::size_t height) : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("lattice dimensions must be at least 1x1");
  }
}

namespace {

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

LatticeSpec LatticeSpec::parse(std::string_view text) {
  auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) {
    throw InvalidArgument("lattice must be given as WxH, got '" + std::string(text) + "'");
  }
  auto w = parse_size(text.substr(0, x));
  auto h = parse_size(text.substr(x + 1));
  if (!w || !h) throw InvalidArgument("lattice must be given as WxH, got '" + std::string(text) + "'");
  return LatticeSpec(*w, *h);
}

std::string LatticeSpec::to_string() const {
  return std::to_string(width_) + "x" + std::to_string(height_);
}

Graph make_lattice(const LatticeSpec& spec) {
  const std::size_t w = spec.width();
  const std::size_t h = spec.height();
  Graph g(w * h);
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      auto id = static_cast<NodeId>(row * w + col);
      if (col + 1 < w) g.add_edge(id, id + 1);
      if (row + 1 < h) g.add_edge(id, static_cast<NodeId>(id + w));
    }
  }
  return g;
}

std::size_t degree_within(const Graph& graph, std::span<const NodeId> subset, NodeId node) {
  std::vector<bool> member(graph.node_count(), false);
  for (NodeId n : subset) {
    if (n >= graph.node_count()) {
      throw InvalidArgument("node id " + std::to_string(n) + " out of range");
    }
    member[n] = true;
  }
  if (node >= graph.node_count() || !member[node]) {
    throw InvalidArgument("node " + std::to_string(node) + " is not in the subset");
  }
  return static_cast<std::size_t>(std::count_if(graph.neighbors(node).begin(), graph.neighbors(node).end(),
                                                 [&](NodeId v) { return member[v]; }));
}

Graph load_graph(std::string_view text) {
  std::optional<Graph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!graph) {
      auto n = tokens.size() == 1 ? parse_size(tokens[0]) : std::nullopt;
      if (!n) throw ParseError(line_no, "expected node count");
      graph.emplace(*n);
      continue;
    }

    if (tokens[0] == "L") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'L <id> <role>'");
      auto id = parse_size(tokens[1]);
      auto role = parse_role(tokens[2]);
      if (!id) throw ParseError(line_no, "malformed node id '" + std::string(tokens[1]) + "'");
      if (*id >= graph->node_count()) {
        throw ParseError(line_no, "node id " + std::to_string(*id) + " out of range");
      }
      if (!role) throw ParseError(line_no, "unknown role '" + std::string(tokens[2]) + "'");
      try {
        graph->set_role(static_cast<NodeId>(*id), *role);
      } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    auto u = parse_size(tokens[0]);
    auto v = parse_size(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "malformed edge '" + std::string(line) + "'");
    for (auto id : {*u, *v}) {
      if (id >= graph->node_count()) {
        throw ParseError(line_no, "node id " + std::to_string(id) + " out of range");
      }
    }
    if (*u >= *v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    try {
      graph->add_edge(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!graph) throw ParseError(0, "empty document: missing node count");
  return std::move(*graph);
}

std::string save_graph(const Graph& graph) {
  std::ostringstream out;
  out << graph.node_count() << '\n';
  for (const auto& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (graph.role(n) != NodeRole::ordinary) out << "L " << n << ' ' << to_string(graph.role(n)) << '\n';
  }
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

void save_graph_file(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << save_graph(graph);
}

}  // namespace fcnet::topology
