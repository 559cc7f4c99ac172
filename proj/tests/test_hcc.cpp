#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"

#include "fcnet/errors.hpp"
#include "fcnet/hcc.hpp"
#include "fcnet/topology.hpp"
#include "test_support.hpp"

using namespace fcnet;
using namespace fcnet::hcc;

namespace {

// Structural check against the definition of a BFS tree on `g`.
void check_bfs_tree(const Graph& g, const BfsTree& t) {
  const std::size_t n = g.node_count();
  REQUIRE(t.node_count() == n);
  REQUIRE(t.parent[t.root] == t.root);
  REQUIRE(t.depth[t.root] == 0);

  // true distances by plain BFS
  std::vector<int> dist(n, -1);
  std::queue<NodeId> q;
  dist[t.root] = 0;
  q.push(t.root);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }

  for (NodeId v = 0; v < n; ++v) {
    REQUIRE(static_cast<int>(t.depth[v]) == dist[v]);
    REQUIRE(std::is_sorted(t.children[v].begin(), t.children[v].end()));
    std::uint32_t size = 1;
    for (auto c : t.children[v]) {
      REQUIRE(t.parent[c] == v);
      size += t.subtree_size[c];
    }
    REQUIRE(t.subtree_size[v] == size);
    if (v == t.root) continue;
    const NodeId p = t.parent[v];
    REQUIRE(g.has_edge(v, p));
    REQUIRE(t.depth[v] == t.depth[p] + 1);
    for (auto u : g.neighbors(v)) {
      if (t.depth[u] + 1 == t.depth[v]) REQUIRE(p <= u);  // lowest-id parent
    }
  }
  REQUIRE(t.subtree_size[t.root] == n);
}

// Brute-force validity: partition, heads inside, tree-connected, size bounds.
void check_clusters(const BfsTree& t, const ClusterAssignment& a, std::size_t k, bool upper_bound = true) {
  const std::size_t n = t.node_count();
  REQUIRE(a.cluster_of.size() == n);
  REQUIRE(a.size_bound_k == k);
  const auto sizes = a.sizes();
  for (ClusterId c = 0; c < a.cluster_count(); ++c) {
    REQUIRE(a.cluster_of[a.heads[c]] == c);
    // a tree-connected member set has exactly one node whose parent lies outside
    std::size_t tops = 0;
    for (NodeId v : a.members(c)) {
      if (v == t.root || a.cluster_of[t.parent[v]] != c) ++tops;
    }
    REQUIRE(tops == 1);
    if (upper_bound) REQUIRE(sizes[c] <= 2 * k);
    if (a.cluster_of[t.root] != c) REQUIRE(sizes[c] >= k);
  }
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  REQUIRE(total == n);
}

}  // namespace

TEST_CASE("build_bfs_tree on a path") {
  BfsTree t = build_bfs_tree(make_path(3), 0);
  CHECK(t.parent == std::vector<NodeId>{0, 0, 1});
  CHECK(t.depth == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(t.subtree_size == std::vector<std::uint32_t>{3, 2, 1});
}

TEST_CASE("build_bfs_tree breaks ties by lowest parent id") {
  BfsTree t = build_bfs_tree(topology::make_lattice({2, 2}), 0);
  CHECK(t.parent[1] == 0);
  CHECK(t.parent[2] == 0);
  CHECK(t.parent[3] == 1);
  CHECK(t.children[0] == std::vector<NodeId>{1, 2});
}

TEST_CASE("build_bfs_tree on the 4x5 lattice") {
  Graph g = topology::make_lattice({4, 5});
  BfsTree t = build_bfs_tree(g, 0);
  CHECK(t.subtree_size[0] == 20);
  CHECK(t.max_depth() == 7);
  CHECK(t.depth[19] == 7);
  check_bfs_tree(g, t);
}

TEST_CASE("build_bfs_tree rejects disconnected graphs and bad roots") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  try {
    build_bfs_tree(g, 0);
    FAIL("expected DisconnectedGraph");
  } catch (const DisconnectedGraph& e) {
    CHECK(std::string(e.what()).find("node 3") != std::string::npos);
  }
  CHECK_THROWS_AS(build_bfs_tree(make_path(3), 3), InvalidArgument);
}

TEST_CASE("BFS tree invariants over lattices and random connected graphs") {
  for (std::size_t w = 1; w <= 8; ++w) {
    for (std::size_t h = 1; h <= 8; ++h) {
      Graph g = topology::make_lattice({w, h});
      for (NodeId root : {NodeId{0}, static_cast<NodeId>(g.node_count() / 2)}) {
        check_bfs_tree(g, build_bfs_tree(g, root));
      }
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test_support::random_connected_graph(2 + rng() % 20, 0.15, rng);
    check_bfs_tree(g, build_bfs_tree(g, static_cast<NodeId>(rng() % g.node_count())));
  }
}

TEST_CASE("form_clusters examples") {
  SUBCASE("whole path below the bound") {
    auto a = form_clusters(build_bfs_tree(make_path(3), 0), 3);
    CHECK(a.cluster_count() == 1);
    CHECK(a.heads == std::vector<NodeId>{0});
    CHECK(a.members(0) == std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("post-order accumulation on a 4-path") {
    auto a = form_clusters(build_bfs_tree(make_path(4), 0), 2);
    REQUIRE(a.cluster_count() == 2);
    CHECK(a.heads == std::vector<NodeId>{2, 0});
    CHECK(a.members(0) == std::vector<NodeId>{2, 3});
    CHECK(a.members(1) == std::vector<NodeId>{0, 1});
  }
  SUBCASE("k = 1 gives singletons") {
    Graph g = topology::make_lattice({3, 4});
    auto a = form_clusters(build_bfs_tree(g, 0), 1);
    CHECK(a.cluster_count() == g.node_count());
    for (ClusterId c = 0; c < a.cluster_count(); ++c) CHECK(a.members(c) == std::vector<NodeId>{a.heads[c]});
  }
  CHECK_THROWS_AS(form_clusters(build_bfs_tree(make_path(3), 0), 0), InvalidArgument);
}

TEST_CASE("cluster invariants over corner-rooted lattices up to 5x5") {
  for (std::size_t w = 1; w <= 5; ++w) {
    for (std::size_t h = 1; h <= 5; ++h) {
      const BfsTree t = build_bfs_tree(topology::make_lattice({w, h}), 0);
      const std::size_t n = w * h;
      for (std::size_t k : {2u, 3u, 4u}) {
        auto a = form_clusters(t, k);
        check_clusters(t, a, k);
        CHECK(a.cluster_count() <= (n + k - 1) / k);
        CHECK(a.cluster_count() >= (n + 2 * k - 1) / (2 * k));
      }
    }
  }
}

TEST_CASE("cluster size is bounded by branching for any root") {
  // Each node merges at most (k - 1) open nodes per child.
  for (std::size_t w = 1; w <= 5; ++w) {
    for (std::size_t h = 1; h <= 5; ++h) {
      Graph g = topology::make_lattice({w, h});
      for (NodeId root = 0; root < g.node_count(); ++root) {
        const BfsTree t = build_bfs_tree(g, root);
        std::size_t branching = 0;
        for (const auto& c : t.children) branching = std::max(branching, c.size());
        for (std::size_t k : {2u, 3u, 4u}) {
          auto a = form_clusters(t, k);
          check_clusters(t, a, k, /*upper_bound=*/false);
          for (auto s : a.sizes()) REQUIRE(s <= 1 + branching * (k - 1));
        }
      }
    }
  }
}

TEST_CASE("build_functional_topology") {
  SUBCASE("single head") {
    auto t = build_bfs_tree(make_path(3), 0);
    auto ft = build_functional_topology(t, form_clusters(t, 3));
    CHECK(ft.graph.node_count() == 4);
    CHECK(ft.base_station == 3);
    CHECK(ft.graph.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(ft.graph.role(3) == NodeRole::base_station);
    CHECK(ft.graph.role(0) == NodeRole::cluster_head);
    CHECK(ft.graph.role(1) == NodeRole::ordinary);
  }
  SUBCASE("two heads on a 4-path") {
    auto t = build_bfs_tree(make_path(4), 0);
    auto ft = build_functional_topology(t, form_clusters(t, 2));
    CHECK(ft.graph.node_count() == 5);
    CHECK(ft.head_nodes == std::vector<NodeId>{0, 2});
    CHECK(ft.graph.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {2, 4}});
  }
  SUBCASE("counts and tree structure without the base station") {
    for (std::size_t w = 1; w <= 5; ++w) {
      for (std::size_t h = 1; h <= 5; ++h) {
        auto t = build_bfs_tree(topology::make_lattice({w, h}), 0);
        for (std::size_t k = 1; k <= 6; ++k) {
          auto a = form_clusters(t, k);
          auto ft = build_functional_topology(t, a);
          REQUIRE(ft.graph.node_count() == w * h + 1);
          REQUIRE(ft.graph.edge_count() == (w * h - 1) + a.cluster_count());
          Graph without(w * h);
          for (const auto& e : ft.graph.edges()) {
            if (e.v != ft.base_station) without.add_edge(e.u, e.v);
          }
          REQUIRE(without.is_connected());
          REQUIRE(without.edge_count() == w * h - 1);  // connected + n-1 edges => tree
          REQUIRE(without.edges() == t.edges());
        }
      }
    }
  }
}

TEST_CASE("add_node maintenance cost") {
  auto t = build_bfs_tree(make_path(3), 0);
  auto ft = build_functional_topology(t, form_clusters(t, 3));

  auto leaf = add_node(ft, t, 2);
  CHECK(leaf.cost == MaintenanceCost{1, 3});
  CHECK(leaf.new_node == 3);
  CHECK(leaf.topology.base_station == 4);
  CHECK(leaf.tree.parent[3] == 2);
  CHECK(leaf.tree.depth[3] == 3);
  CHECK(leaf.tree.subtree_size == std::vector<std::uint32_t>{4, 3, 2, 1});
  CHECK(leaf.topology.graph.has_edge(2, 3));
  CHECK(leaf.topology.graph.has_edge(0, 4));
  CHECK(leaf.topology.graph.role(4) == NodeRole::base_station);

  CHECK(add_node(ft, t, 0).cost == MaintenanceCost{1, 1});

  auto once = add_node(ft, t, 1);
  auto twice = add_node(once.topology, once.tree, 1);
  CHECK(twice.topology.graph.node_count() == ft.graph.node_count() + 2);
  CHECK(twice.topology.graph.edge_count() == ft.graph.edge_count() + 2);
  CHECK(twice.tree.children[1] == std::vector<NodeId>{2, 3, 4});
  CHECK(twice.topology.head_nodes == ft.head_nodes);

  CHECK_THROWS_AS(add_node(ft, t, ft.base_station), InvalidArgument);
  CHECK_THROWS_AS(add_node(ft, t, 17), InvalidArgument);
}

TEST_CASE("add_node keeps the BFS tree invariants") {
  auto g = topology::make_lattice({4, 5});
  auto t = build_bfs_tree(g, 0);
  auto ft = build_functional_topology(t, form_clusters(t, 4));
  for (NodeId parent = 0; parent < t.node_count(); ++parent) {
    auto r = add_node(ft, t, parent);
    REQUIRE(r.cost.new_links == 1);
    REQUIRE(r.cost.notified_nodes == t.depth[parent] + 1);
    REQUIRE(r.tree.subtree_size[r.tree.root] == t.node_count() + 1);
    // removing the base station still leaves a spanning tree
    REQUIRE(r.topology.graph.edge_count() == r.tree.node_count() - 1 + ft.head_nodes.size());
  }
}
