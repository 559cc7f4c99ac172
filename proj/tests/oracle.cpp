#include "oracle.hpp"

#include <cmath>
#include <functional>

namespace oracle {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const Problem& p) {
  Matrix a(p.n, std::vector<int>(p.n, 0));
  for (auto [u, v] : p.edges) a[u][v] = a[v][u] = 1;
  return a;
}

bool connected(const Matrix& a, const std::vector<int>& nodes) {
  std::vector<int> seen(nodes.size(), 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    seen[i] = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!seen[k] && a[nodes[i]][nodes[k]]) dfs(k);
    }
  };
  dfs(0);
  for (int s : seen) {
    if (!s) return false;
  }
  return true;
}

double information(const Problem& p, const Matrix& a, const std::vector<int>& nodes) {
  double total = 0.0;
  const int j = static_cast<int>(nodes.size());
  for (int x : nodes) {
    int reach = p.include_self ? 1 : 0;
    for (int y : nodes) {
      if (y != x && a[x][y]) ++reach;
    }
    total += entropy(static_cast<double>(reach) / j);
  }
  return total;
}

template <typename F>
void combinations(int n, int j, F&& visit) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == j) {
      visit(pick);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

double entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
}

double average_information(const Problem& p, int j) {
  const Matrix a = adjacency(p);
  double sum = 0.0;
  long long count = 0;
  combinations(p.n, j, [&](const std::vector<int>& nodes) {
    if (p.connected_only && !connected(a, nodes)) return;
    sum += information(p, a, nodes);
    ++count;
  });
  return count == 0 ? -1.0 : sum / static_cast<double>(count);
}

long long family_size(const Problem& p, int j) {
  const Matrix a = adjacency(p);
  long long count = 0;
  combinations(p.n, j, [&](const std::vector<int>& nodes) {
    if (!p.connected_only || connected(a, nodes)) ++count;
  });
  return count;
}

double total_information(const Problem& p) {
  std::vector<int> all(p.n);
  for (int i = 0; i < p.n; ++i) all[i] = i;
  return information(p, adjacency(p), all);
}

double functional_complexity(const Problem& p) {
  const double whole = total_information(p);
  double c = 0.0;
  for (int j = 2; j <= p.n; ++j) {
    c += std::fabs(average_information(p, j) - static_cast<double>(j) / p.n * whole);
  }
  return c;
}

}  // namespace oracle
