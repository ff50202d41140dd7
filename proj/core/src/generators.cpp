#include "robust/generators.hpp"

#include <algorithm>
#include <numeric>

namespace robust {

Instance gen_failure_instance(int n, double eps) {
  if (n < 3) throw DomainError("gen_failure_instance: n must be at least 3");
  if (!(eps > 0.0 && eps < 1.0))
    throw DomainError("gen_failure_instance: eps must lie in (0,1)");
  Instance inst;
  inst.kind = Kind::Tsp;
  inst.vertex_count = n + 1;  // vertex 0 is the hub v'
  double spoke = 1.0 - eps;
  for (int i = 1; i <= n; ++i)
    inst.edges.push_back({0, i, spoke, spoke});  // type-1
  double rim_hi = 2.0 - 1.0 / (n - 1);
  for (int i = 1; i <= n; ++i) {
    int j = i == n ? 1 : i + 1;
    inst.edges.push_back({i, j, 0.0, rim_hi});  // type-2
  }
  inst.terminals.resize(n + 1);
  std::iota(inst.terminals.begin(), inst.terminals.end(), 0);
  validate(inst);
  return inst;
}

EdgeMultiset failure_doubled_star(const Instance& inst) {
  int n = inst.vertex_count - 1;
  EdgeMultiset sol(inst.edge_count());
  for (int i = 0; i < n; ++i) sol[i] = 2;
  return sol;
}

EdgeMultiset failure_cycle_solution(const Instance& inst) {
  int n = inst.vertex_count - 1;
  EdgeMultiset sol(inst.edge_count());
  sol[0] = 1;      // hub to v1
  sol[n - 1] = 1;  // hub to vn
  // Rim path v1..vn (all type-2 edges except the closing one).
  for (int i = 0; i < n - 1; ++i) sol[n + i] = 1;
  return sol;
}

Instance gen_random(const RandomInstanceSpec& spec) {
  int n = spec.vertex_count;
  int m = spec.edge_count;
  if (n < 2) throw DomainError("gen_random: need at least two vertices");
  if (m < n - 1) throw DomainError("gen_random: too few edges to connect");
  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.kind = spec.kind;
  inst.vertex_count = n;

  auto draw_bounds = [&](Edge& e) {
    double a = spec.max_magnitude *
               static_cast<double>(rng.next_below(9)) / 8.0;
    double b = spec.max_magnitude *
               static_cast<double>(rng.next_below(9)) / 8.0;
    e.lo = std::min(a, b);
    e.hi = std::max(a, b);
  };

  // Random attachment tree keeps the instance connected.
  for (int v = 1; v < n; ++v) {
    Edge e;
    e.u = static_cast<int>(rng.next_below(v));
    e.v = v;
    draw_bounds(e);
    inst.edges.push_back(e);
  }
  for (int k = n - 1; k < m; ++k) {
    Edge e;
    e.u = static_cast<int>(rng.next_below(n));
    e.v = static_cast<int>(rng.next_below(n - 1));
    if (e.v >= e.u) ++e.v;
    if (e.u > e.v) std::swap(e.u, e.v);
    draw_bounds(e);
    inst.edges.push_back(e);
  }

  if (spec.kind == Kind::Tsp) {
    inst.terminals.resize(n);
    std::iota(inst.terminals.begin(), inst.terminals.end(), 0);
  } else {
    for (int v = 0; v < n; ++v)
      if (rng.next_double() < spec.terminal_density)
        inst.terminals.push_back(v);
    // Always at least two terminals so instances are non-trivial.
    if (inst.terminals.empty()) inst.terminals.push_back(0);
    if (inst.terminals.size() == 1) {
      int other = inst.terminals[0] == n - 1 ? 0 : n - 1;
      inst.terminals.push_back(other);
      std::sort(inst.terminals.begin(), inst.terminals.end());
    }
  }
  validate(inst);
  return inst;
}

std::vector<Edge> random_tree(int vertex_count, SplitMix64& rng) {
  int n = vertex_count;
  if (n <= 1) return {};
  if (n == 2) return {{0, 1, 0.0, 0.0}};
  std::vector<int> pruefer(n - 2);
  for (int& p : pruefer) p = static_cast<int>(rng.next_below(n));
  std::vector<int> degree(n, 1);
  for (int p : pruefer) ++degree[p];
  std::vector<Edge> edges;
  std::vector<char> used(n, 0);
  for (int p : pruefer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    edges.push_back({leaf, p, 0.0, 0.0});
    used[leaf] = 1;
    --degree[p];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1], 0.0, 0.0});
  return edges;
}

}  // namespace robust
