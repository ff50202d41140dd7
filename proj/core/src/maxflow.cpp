#include "robust/maxflow.hpp"

#include <algorithm>

namespace robust {

namespace {
constexpr double kFlowTol = 1e-9;
}

MaxFlowResult max_flow_min_cut(int vertex_count,
                               const std::vector<Edge>& edges,
                               const CostVector& capacities, int s, int t) {
  int n = vertex_count;
  // Arc pairs: arc a and a^1 are mutual reverses. An undirected edge
  // becomes two pairs so each direction carries the full capacity.
  struct Arc {
    int to;
    double cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(n);
  auto add_pair = [&](int u, int v, double c) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, c});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0.0});
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    add_pair(edges[e].u, edges[e].v, capacities[e]);
    add_pair(edges[e].v, edges[e].u, capacities[e]);
  }

  std::vector<double> excess(n, 0.0);
  std::vector<int> height(n, 0);
  height[s] = n;
  for (int a : out[s]) {
    double c = arcs[a].cap;
    if (c <= 0.0) continue;
    arcs[a].cap = 0.0;
    arcs[a ^ 1].cap += c;
    excess[arcs[a].to] += c;
    excess[s] -= c;
  }

  auto active = [&](int v) {
    return v != s && v != t && excess[v] > kFlowTol;
  };
  while (true) {
    // Highest-label selection; lowest vertex index breaks ties.
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (active(v) && (u < 0 || height[v] > height[u])) u = v;
    if (u < 0) break;

    bool pushed = false;
    for (int a : out[u]) {
      if (arcs[a].cap <= kFlowTol || height[u] != height[arcs[a].to] + 1)
        continue;
      double delta = std::min(excess[u], arcs[a].cap);
      arcs[a].cap -= delta;
      arcs[a ^ 1].cap += delta;
      excess[u] -= delta;
      excess[arcs[a].to] += delta;
      pushed = true;
      if (excess[u] <= kFlowTol) break;
    }
    if (!pushed) {
      // Relabel to one above the lowest admissible neighbour.
      int best = 2 * n;
      for (int a : out[u])
        if (arcs[a].cap > kFlowTol) best = std::min(best, height[arcs[a].to]);
      height[u] = best + 1;
    }
  }

  MaxFlowResult result;
  result.value = excess[t];
  result.source_side.assign(n, 0);
  std::vector<int> stack{s};
  result.source_side[s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a : out[u])
      if (arcs[a].cap > kFlowTol && !result.source_side[arcs[a].to]) {
        result.source_side[arcs[a].to] = 1;
        stack.push_back(arcs[a].to);
      }
  }
  return result;
}

}  // namespace robust
