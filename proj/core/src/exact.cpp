#include "robust/exact.hpp"

#include <algorithm>
#include <limits>

#include "robust/graph.hpp"

namespace robust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// All-pairs shortest paths with per-source predecessor trees.
struct Metric {
  std::vector<ShortestPaths> from;  // indexed by source

  Metric(const Instance& inst, const Realization& d) {
    from.reserve(inst.vertex_count);
    for (int s = 0; s < inst.vertex_count; ++s)
      from.push_back(dijkstra(inst.vertex_count, inst.edges, d, s));
  }
  double dist(int s, int t) const { return from[s].dist[t]; }
  std::vector<int> path(int s, int t) const {
    return extract_path(from[s], s, t);
  }
};

/// Turns a set of edge indices into a tree: keeps a minimum-weight spanning
/// forest of the chosen subgraph, then prunes non-terminal leaves. Used to
/// normalize DP reconstructions that may overlap on zero-cost edges.
EdgeMultiset normalize_tree(const Instance& inst, const Realization& d,
                            std::vector<char> chosen) {
  int m = inst.edge_count();
  std::vector<int> order;
  for (int e = 0; e < m; ++e)
    if (chosen[e]) order.push_back(e);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });
  UnionFind uf(inst.vertex_count);
  EdgeMultiset tree(m);
  for (int e : order)
    if (uf.unite(inst.edges[e].u, inst.edges[e].v)) tree[e] = 1;

  // Prune non-terminal leaves repeatedly.
  std::vector<int> degree(inst.vertex_count, 0);
  for (int e = 0; e < m; ++e)
    if (tree[e]) {
      ++degree[inst.edges[e].u];
      ++degree[inst.edges[e].v];
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < m; ++e) {
      if (!tree[e]) continue;
      int u = inst.edges[e].u;
      int v = inst.edges[e].v;
      int leaf = -1;
      if (degree[u] == 1 && !inst.is_terminal(u)) leaf = u;
      else if (degree[v] == 1 && !inst.is_terminal(v)) leaf = v;
      if (leaf >= 0) {
        tree[e] = 0;
        --degree[u];
        --degree[v];
        changed = true;
      }
    }
  }
  return tree;
}

}  // namespace

std::pair<double, EdgeMultiset> opt_steiner(const Instance& inst,
                                            const Realization& d) {
  int k = static_cast<int>(inst.terminals.size());
  if (k > kMaxSteinerTerminals)
    throw CapError("opt_steiner: terminal count exceeds cap");
  int n = inst.vertex_count;
  EdgeMultiset empty(inst.edge_count());
  if (k <= 1) return {0.0, empty};

  Metric metric(inst, d);

  // dp[S][v]: cheapest tree containing terminal subset S and vertex v.
  int subsets = 1 << k;
  std::vector<std::vector<double>> dp(subsets,
                                      std::vector<double>(n, kInf));
  // Reconstruction choices: merge split (submask) or extend endpoint.
  std::vector<std::vector<int>> split(subsets, std::vector<int>(n, -1));
  std::vector<std::vector<int>> attach(subsets, std::vector<int>(n, -1));

  for (int i = 0; i < k; ++i)
    for (int v = 0; v < n; ++v) {
      dp[1 << i][v] = metric.dist(inst.terminals[i], v);
      attach[1 << i][v] = inst.terminals[i];
    }

  std::vector<double> merged(n);
  std::vector<int> merged_split(n);
  for (int S = 1; S < subsets; ++S) {
    if ((S & (S - 1)) == 0) continue;  // singletons done
    for (int v = 0; v < n; ++v) {
      merged[v] = kInf;
      merged_split[v] = -1;
    }
    // Canonical submask enumeration: S' always contains S's lowest bit.
    int low = S & (-S);
    for (int sub = (S - 1) & S; sub > 0; sub = (sub - 1) & S) {
      if (!(sub & low)) continue;
      int rest = S ^ sub;
      for (int v = 0; v < n; ++v) {
        double c = dp[sub][v] + dp[rest][v];
        if (c < merged[v]) {
          merged[v] = c;
          merged_split[v] = sub;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      double best = merged[v];
      int best_u = -1;
      for (int u = 0; u < n; ++u) {
        double c = merged[u] + metric.dist(u, v);
        if (c < best) {
          best = c;
          best_u = u;
        }
      }
      dp[S][v] = best;
      if (best_u >= 0) {
        attach[S][v] = best_u;
        split[S][v] = merged_split[best_u];
      } else {
        split[S][v] = merged_split[v];
      }
    }
  }

  int full = subsets - 1;
  int root = inst.terminals[0];
  double cost = dp[full][root];

  // Reconstruct the chosen edge set.
  std::vector<char> chosen(inst.edge_count(), 0);
  std::vector<std::pair<int, int>> stack{{full, root}};
  while (!stack.empty()) {
    auto [S, v] = stack.back();
    stack.pop_back();
    if ((S & (S - 1)) == 0) {
      for (int e : metric.path(attach[S][v], v)) chosen[e] = 1;
      continue;
    }
    int u = attach[S][v];
    int anchor = v;
    if (u >= 0) {
      for (int e : metric.path(u, v)) chosen[e] = 1;
      anchor = u;
    }
    int sub = split[S][v];  // split stored at the merge vertex
    stack.push_back({sub, anchor});
    stack.push_back({S ^ sub, anchor});
  }

  EdgeMultiset tree = normalize_tree(inst, d, chosen);
  double tree_cost = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e) tree_cost += tree[e] * d[e];
  // The normalized tree can only be cheaper than the DP reconstruction and
  // no feasible tree is cheaper than the DP optimum.
  (void)cost;
  return {tree_cost, tree};
}

std::pair<double, EdgeMultiset> opt_tsp(const Instance& inst,
                                        const Realization& d) {
  int n = inst.vertex_count;
  if (n > kMaxTspVertices)
    throw CapError("opt_tsp: vertex count exceeds cap");
  EdgeMultiset walk(inst.edge_count());
  if (n == 1) return {0.0, walk};

  Metric metric(inst, d);

  int subsets = 1 << n;
  std::vector<std::vector<double>> dp(subsets,
                                      std::vector<double>(n, kInf));
  std::vector<std::vector<int>> prev(subsets, std::vector<int>(n, -1));
  dp[1][0] = 0.0;
  for (int mask = 1; mask < subsets; ++mask) {
    if (!(mask & 1)) continue;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || dp[mask][j] == kInf) continue;
      for (int t = 0; t < n; ++t) {
        if (mask & (1 << t)) continue;
        double c = dp[mask][j] + metric.dist(j, t);
        int nm = mask | (1 << t);
        if (c < dp[nm][t]) {
          dp[nm][t] = c;
          prev[nm][t] = j;
        }
      }
    }
  }
  int full = subsets - 1;
  double best = kInf;
  int best_end = 0;
  for (int j = 0; j < n; ++j) {
    double c = dp[full][j] + metric.dist(j, 0);
    if (c < best) {
      best = c;
      best_end = j;
    }
  }

  // Recover the closure tour, then expand closure hops to graph paths.
  std::vector<int> tour;
  int mask = full;
  int at = best_end;
  while (at != -1) {
    tour.push_back(at);
    int p = prev[mask][at];
    mask ^= 1 << at;
    at = p;
  }
  std::reverse(tour.begin(), tour.end());
  tour.push_back(0);

  for (std::size_t i = 0; i + 1 < tour.size(); ++i)
    for (int e : metric.path(tour[i], tour[i + 1])) ++walk[e];

  // An optimal closed walk never needs an edge three times; shedding two
  // copies keeps parity and connectivity, and only zero-length edges can be
  // over-used in an optimal reconstruction.
  for (std::size_t e = 0; e < walk.size(); ++e)
    while (walk[e] > 2) walk[e] -= 2;

  double cost = 0.0;
  for (std::size_t e = 0; e < walk.size(); ++e) cost += walk[e] * d[e];
  return {cost, walk};
}

std::pair<double, EdgeMultiset> opt(const Instance& inst,
                                    const Realization& d) {
  return inst.kind == Kind::SteinerTree ? opt_steiner(inst, d)
                                        : opt_tsp(inst, d);
}

BoxSweep::BoxSweep(const Instance& inst) : inst_(inst) {
  for (int e = 0; e < inst.edge_count(); ++e)
    if (inst.edges[e].lo < inst.edges[e].hi) free_edges_.push_back(e);
  if (free_edge_count() > kMaxSweepFreeEdges)
    throw CapError("box sweep: too many free edges");
  std::uint64_t count = vertex_count();
  computed_.assign(count, 0);
  opt_.assign(count, 0.0);
}

Realization BoxSweep::realization(std::uint64_t id) const {
  Realization d = inst_.lower();
  for (std::size_t i = 0; i < free_edges_.size(); ++i)
    if (id & (1ULL << i)) d[free_edges_[i]] = inst_.edges[free_edges_[i]].hi;
  return d;
}

void BoxSweep::ensure(std::uint64_t id) const {
  if (computed_[id]) return;
  opt_[id] = robust::opt(inst_, realization(id)).first;
  computed_[id] = 1;
}

double BoxSweep::opt_value(std::uint64_t id) const {
  ensure(id);
  return opt_[id];
}

const EdgeMultiset& BoxSweep::opt_solution(std::uint64_t id) const {
  // Witness solutions are needed rarely; recompute instead of caching all.
  static thread_local EdgeMultiset scratch;
  scratch = robust::opt(inst_, realization(id)).second;
  return scratch;
}

void BoxSweep::precompute() const {
  for (std::uint64_t id = 0; id < vertex_count(); ++id) ensure(id);
}

double BoxSweep::multiset_value(const EdgeMultiset& sol,
                                std::uint64_t id) const {
  double value = 0.0;
  for (std::size_t e = 0; e < sol.size(); ++e)
    value += sol[e] * inst_.edges[e].lo;
  for (std::size_t i = 0; i < free_edges_.size(); ++i)
    if (id & (1ULL << i)) {
      int e = free_edges_[i];
      value += sol[e] * (inst_.edges[e].hi - inst_.edges[e].lo);
    }
  return value;
}

RegretReport regret_of(const BoxSweep& sweep, const EdgeMultiset& sol) {
  require_feasible(sweep.instance(), sol);
  RegretReport report;
  report.regret_value = -kInf;
  std::uint64_t best_id = 0;
  for (std::uint64_t id = 0; id < sweep.vertex_count(); ++id) {
    double value = sweep.multiset_value(sol, id) - sweep.opt_value(id);
    if (value > report.regret_value) {
      report.regret_value = value;
      best_id = id;
    }
  }
  report.witness_realization = sweep.realization(best_id);
  report.witness_adversary = sweep.opt_solution(best_id);
  return report;
}

RegretReport regret_of(const Instance& inst, const EdgeMultiset& sol) {
  BoxSweep sweep(inst);
  return regret_of(sweep, sol);
}

RegretReport regret_by_adversary_enumeration(const Instance& inst,
                                             const EdgeMultiset& sol) {
  if (inst.kind != Kind::SteinerTree)
    throw DomainError("adversary enumeration is Steiner-only");
  require_feasible(inst, sol);
  RegretReport report;
  report.regret_value = -kInf;
  for_each_feasible_solution(inst, [&](const EdgeMultiset& adv) {
    Realization d = adversarial_realization(inst, sol, adv);
    double value = 0.0;
    for (std::size_t e = 0; e < sol.size(); ++e)
      value += (sol[e] - adv[e]) * d[e];
    if (value > report.regret_value) {
      report.regret_value = value;
      report.witness_realization = d;
      report.witness_adversary = adv;
    }
  });
  return report;
}

void for_each_feasible_solution(
    const Instance& inst, const std::function<void(const EdgeMultiset&)>& f) {
  int m = inst.edge_count();
  int max_mult = inst.kind == Kind::SteinerTree ? 1 : 2;
  if (inst.kind == Kind::SteinerTree) {
    if (m > kMaxEnumEdges)
      throw CapError("solution enumeration: too many edges");
  } else {
    if (m > 13) throw CapError("solution enumeration: too many edges (3^m)");
  }
  EdgeMultiset sol(m);
  // Odometer in lexicographic order, edge 0 most significant.
  while (true) {
    if (is_feasible(inst, sol)) f(sol);
    int i = m - 1;
    while (i >= 0 && sol[i] == max_mult) {
      sol[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++sol[i];
  }
}

MrsReport min_regret_solution(const Instance& inst) {
  BoxSweep sweep(inst);
  sweep.precompute();
  MrsReport report;
  report.mr = kInf;
  bool found = false;
  for_each_feasible_solution(inst, [&](const EdgeMultiset& sol) {
    double local_max = -kInf;
    for (std::uint64_t id = 0; id < sweep.vertex_count(); ++id) {
      double value = sweep.multiset_value(sol, id) - sweep.opt_value(id);
      if (value > local_max) local_max = value;
      if (local_max >= report.mr) return;  // cannot strictly improve
    }
    if (local_max < report.mr) {
      report.mr = local_max;
      report.mrs = sol;
      found = true;
    }
  });
  if (!found) throw ValidationError("instance admits no feasible solution");
  return report;
}

}  // namespace robust
