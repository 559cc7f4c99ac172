#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "fcnet/graph.hpp"

namespace fcnet::topology {

/// Grid dimensions. Both must be at least 1; the constructor enforces it.
class LatticeSpec {
 public:
  LatticeSpec(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t cells() const noexcept { return width_ * height_; }

  /// Parses "WxH", e.g. "4x5".
  static LatticeSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
};

/// Von Neumann (4-neighbour) grid. Cell (row, col) has id row * width + col.
Graph make_lattice(const LatticeSpec& spec);

/// Number of neighbours of `node` that lie in `subset`. Throws InvalidArgument
/// if `node` itself is not in `subset` or an id is out of range.
std::size_t degree_within(const Graph& graph, std::span<const NodeId> subset, NodeId node);

/// Edge-list text: node count on the first line, then "u v" per edge with
/// u < v, '#' comment lines, and optional "L <id> <role>" label lines.
Graph load_graph(std::string_view text);
std::string save_graph(const Graph& graph);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& graph, const std::string& path);

}  // namespace fcnet::topology
