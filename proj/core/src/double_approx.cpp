#include "robust/double_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "robust/graph.hpp"
#include "robust/local_search.hpp"

namespace robust {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RobustParams derive_constants(double gamma, double gamma_prime, double kappa,
                              double eps) {
  if (!(gamma > 1.0)) throw DomainError("derive_constants: Gamma must be > 1");
  if (!(gamma_prime > 1.0))
    throw DomainError("derive_constants: Gamma' must be > 1");
  if (!(kappa > 0.0)) throw DomainError("derive_constants: kappa must be > 0");
  if (eps < 0.0 || eps >= 4.0 / 35.0)
    throw DomainError("derive_constants: eps must lie in [0, 4/35)");
  RobustParams p;
  p.gamma = gamma;
  p.gamma_prime = gamma_prime;
  p.kappa = kappa;
  p.eps = eps;
  double sg = std::sqrt(gamma);
  double sgp = std::sqrt(gamma_prime);
  p.zeta_prime = 4.0 * (1.0 + eps) * gamma_prime /
                 ((sgp - 1.0) * (sgp - 1.0 - eps) * (4.0 * gamma_prime - 1.0) *
                  (4.0 * gamma - 1.0));
  p.alpha = (4.0 * gamma_prime + kappa + 2.0 + eps) * 4.0 * gamma + 1.0;
  p.beta = 4.0 * gamma;
  double expo =
      std::exp(p.zeta_prime * (4.0 * gamma_prime + kappa + 1.0 + eps)) - 1.0;
  double part1 = (4.0 * gamma - 1.0) / (8.0 * gamma);
  double part2 = (4.0 * gamma - 1.0) * (sg - 1.0) * (sg - 1.0 - eps) * kappa /
                 (16.0 * (1.0 + eps) * gamma * gamma);
  p.eta = (std::min(part1, part2) - expo) /
          (1.0 + (4.0 * gamma - 1.0) / (4.0 * gamma) * expo);
  return p;
}

double maincond_value(const RobustParams& p) {
  double sg = std::sqrt(p.gamma);
  double part1 = (4.0 * p.gamma - 1.0) / (8.0 * p.gamma);
  double part2 = (4.0 * p.gamma - 1.0) * (sg - 1.0) * (sg - 1.0 - p.eps) *
                 p.kappa / (16.0 * (1.0 + p.eps) * p.gamma * p.gamma);
  double expo = std::exp(p.zeta_prime *
                         (4.0 * p.gamma_prime + p.kappa + 1.0 + p.eps)) -
                1.0;
  return std::min(part1, part2) - expo;
}

bool maincond_holds(const RobustParams& p) {
  if (!(p.gamma > 1.0) || !(p.gamma_prime > 1.0) || !(p.kappa > 0.0) ||
      p.eps < 0.0 || p.eps >= 4.0 / 35.0)
    throw DomainError("maincond_holds: parameters outside domain");
  // The swap-existence analysis needs eps < sqrt(Gamma)-1 for both weight
  // roles; outside that range zeta' is meaningless.
  if (p.eps >= std::sqrt(p.gamma) - 1.0) return false;
  if (p.eps >= std::sqrt(p.gamma_prime) - 1.0) return false;
  return maincond_value(p) > 0.0;
}

RobustParams paper_optimal_params() {
  return derive_constants(9.284, 5.621, 2.241, 0.001);
}

RobustParams fast_params() { return derive_constants(16.0, 6.0, 4.0, 0.05); }

std::vector<double> geometric_guess_grid(double base, double top, double eps) {
  if (!(base > 0.0) || !(eps > 0.0))
    throw DomainError("geometric_guess_grid: base and eps must be positive");
  std::vector<double> grid;
  double v = base;
  grid.push_back(v);
  while (v < top) {
    v *= 1.0 + eps;
    grid.push_back(v);
  }
  return grid;
}

std::optional<ConstrainedPath> constrained_shortest_path(
    int vertex_count, const std::vector<Edge>& edges, const CostVector& w,
    const CostVector& wp, int s, int t, double budget, double eps,
    const std::vector<char>& forbidden_vertices,
    const std::vector<char>& forbidden_edges) {
  if (budget < 0.0) throw DomainError("constrained_shortest_path: budget < 0");
  auto vertex_ok = [&](int v) {
    return forbidden_vertices.empty() || !forbidden_vertices[v];
  };
  auto edge_ok = [&](int e) {
    return forbidden_edges.empty() || !forbidden_edges[e];
  };
  if (!vertex_ok(s) || !vertex_ok(t))
    throw DomainError("constrained_shortest_path: endpoint forbidden");

  Adjacency adj(vertex_count, edges);

  if (eps == 0.0) {
    // Exact mode: Pareto label search over (w, w') pairs.
    struct Label {
      double wc, wpc;
      int vertex;
      int pred_label;  // index into pool
      int pred_edge;
    };
    std::vector<Label> pool;
    std::vector<std::vector<int>> at(vertex_count);  // non-dominated labels
    auto dominated = [&](int v, double wc, double wpc) {
      for (int id : at[v])
        if (pool[id].wc <= wc + 1e-15 && pool[id].wpc <= wpc + 1e-15)
          return true;
      return false;
    };
    std::vector<int> queue;
    pool.push_back({0.0, 0.0, s, -1, -1});
    at[s].push_back(0);
    queue.push_back(0);
    while (!queue.empty()) {
      // Deterministic: process lexicographically smallest (w, w', vertex).
      std::size_t best = 0;
      for (std::size_t i = 1; i < queue.size(); ++i) {
        const Label &a = pool[queue[i]], &b = pool[queue[best]];
        if (a.wc < b.wc || (a.wc == b.wc && (a.wpc < b.wpc ||
            (a.wpc == b.wpc && a.vertex < b.vertex))))
          best = i;
      }
      int cur = queue[best];
      queue.erase(queue.begin() + best);
      const Label lab = pool[cur];
      if (lab.vertex == t) continue;  // t is a sink: never extended
      for (const auto& arc : adj.out[lab.vertex]) {
        if (!edge_ok(arc.edge)) continue;
        if (arc.to != t && !vertex_ok(arc.to)) continue;
        double nwp = lab.wpc + wp[arc.edge];
        if (nwp > budget + 1e-12) continue;
        double nw = lab.wc + w[arc.edge];
        if (dominated(arc.to, nw, nwp)) continue;
        // Drop labels the new one dominates.
        auto& lst = at[arc.to];
        for (std::size_t i = 0; i < lst.size();) {
          if (pool[lst[i]].wc >= nw - 1e-15 && pool[lst[i]].wpc >= nwp - 1e-15)
            lst.erase(lst.begin() + i);
          else
            ++i;
        }
        pool.push_back({nw, nwp, arc.to, cur, arc.edge});
        lst.push_back(static_cast<int>(pool.size()) - 1);
        queue.push_back(static_cast<int>(pool.size()) - 1);
      }
    }
    int best_label = -1;
    for (int id : at[t])
      if (best_label < 0 || pool[id].wc < pool[best_label].wc ||
          (pool[id].wc == pool[best_label].wc &&
           pool[id].wpc < pool[best_label].wpc))
        best_label = id;
    if (best_label < 0) return std::nullopt;
    ConstrainedPath out;
    out.w_cost = pool[best_label].wc;
    out.wp_cost = pool[best_label].wpc;
    for (int id = best_label; pool[id].pred_label >= 0; id = pool[id].pred_label)
      out.edges.push_back(pool[id].pred_edge);
    std::reverse(out.edges.begin(), out.edges.end());
    return out;
  }

  // Grid DP: round each w'_e down to a multiple of delta = eps*budget/n.
  double delta = eps * budget / vertex_count;
  int levels;
  std::vector<long long> rounded(edges.size(), 0);
  if (delta <= 0.0) {
    levels = 1;  // budget 0: only w'-free edges usable
    for (std::size_t e = 0; e < edges.size(); ++e)
      rounded[e] = wp[e] > 0.0 ? 1 : 0;  // level 1 is out of range
  } else {
    levels = static_cast<int>(std::floor(budget / delta)) + 1;
    for (std::size_t e = 0; e < edges.size(); ++e)
      rounded[e] = static_cast<long long>(std::floor(wp[e] / delta + 1e-12));
  }

  std::vector<std::vector<double>> dist(
      levels, std::vector<double>(vertex_count, kInf));
  std::vector<std::vector<std::pair<int, int>>> pred(
      levels, std::vector<std::pair<int, int>>(vertex_count, {-1, -1}));

  for (int i = 0; i < levels; ++i) {
    if (i == 0) {
      dist[0][s] = 0.0;
    } else {
      dist[i] = dist[i - 1];
      pred[i] = pred[i - 1];
    }
    // Cross-level relaxations into level i.
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!edge_ok(static_cast<int>(e))) continue;
      if (rounded[e] == 0 || rounded[e] > i) continue;
      int from_level = i - static_cast<int>(rounded[e]);
      auto relax = [&](int a, int b) {
        if (b != t && !vertex_ok(b)) return;
        if (a != s && !vertex_ok(a)) return;
        if (a == t) return;  // paths do not pass through t
        double nd = dist[from_level][a] + w[e];
        if (nd < dist[i][b]) {
          dist[i][b] = nd;
          pred[i][b] = {static_cast<int>(e), from_level};
        }
      };
      relax(edges[e].u, edges[e].v);
      relax(edges[e].v, edges[e].u);
    }
    // Within-level closure over zero-rounded edges (Dijkstra over finite
    // starts; weights are nonnegative).
    std::vector<char> done(vertex_count, 0);
    while (true) {
      int u = -1;
      for (int v = 0; v < vertex_count; ++v)
        if (!done[v] && dist[i][v] < kInf && (u < 0 || dist[i][v] < dist[i][u]))
          u = v;
      if (u < 0) break;
      done[u] = 1;
      if (u == t || (u != s && !vertex_ok(u))) continue;
      for (const auto& arc : adj.out[u]) {
        if (!edge_ok(arc.edge) || rounded[arc.edge] != 0) continue;
        if (arc.to != t && !vertex_ok(arc.to)) continue;
        double nd = dist[i][u] + w[arc.edge];
        if (nd < dist[i][arc.to]) {
          dist[i][arc.to] = nd;
          pred[i][arc.to] = {arc.edge, i};
        }
      }
    }
  }

  int final_level = levels - 1;
  if (dist[final_level][t] == kInf) return std::nullopt;
  ConstrainedPath out;
  int v = t;
  int level = final_level;
  while (v != s) {
    auto [e, from_level] = pred[level][v];
    if (e < 0) break;
    out.edges.push_back(e);
    v = edges[e].u == v ? edges[e].v : edges[e].u;
    level = from_level;
  }
  std::reverse(out.edges.begin(), out.edges.end());

  // The level DP can extract a walk (revisits through zero-w chains across
  // levels); splice out loops so the rounding slack stays below n edges.
  {
    std::vector<int> vseq{s};
    std::vector<int> eseq;
    for (int e : out.edges) {
      int nxt = edges[e].u == vseq.back() ? edges[e].v : edges[e].u;
      auto it = std::find(vseq.begin(), vseq.end(), nxt);
      if (it != vseq.end()) {
        std::size_t keep = static_cast<std::size_t>(it - vseq.begin());
        vseq.resize(keep + 1);
        eseq.resize(keep);
      } else {
        vseq.push_back(nxt);
        eseq.push_back(e);
      }
    }
    out.edges = std::move(eseq);
  }

  out.wp_cost = 0.0;
  double wc = 0.0;
  for (int e : out.edges) {
    out.wp_cost += wp[e];
    wc += w[e];
  }
  out.w_cost = wc;
  return out;
}

namespace {

struct RatioSwap {
  SwapMove move;
  double num = 0.0;  // w'(f) - w'(a)
  double den = 0.0;  // w(a) - w(f) > 0 for qualifying swaps
};

/// num1/den1 < num2/den2 with positive denominators.
bool ratio_less(const RatioSwap& a, const RatioSwap& b) {
  return a.num * b.den < b.num * a.den;
}

}  // namespace

GreedySwapResult greedy_swap(const Instance& inst, const EdgeMultiset& alg,
                             const CostVector& w, const CostVector& wp,
                             double chi_cap, double rho_min, double eps) {
  require_feasible(inst, alg);
  WorkingTree tree(inst, alg);

  std::vector<double> budgets{0.0};
  if (chi_cap > 0.0) {
    double base = eps / inst.vertex_count * chi_cap;
    for (double b : geometric_guess_grid(base, chi_cap, eps))
      budgets.push_back(b);
  }

  std::vector<char> forbidden_edges(inst.edge_count(), 0);
  for (int e = 0; e < inst.edge_count(); ++e)
    if (tree.has_edge(e)) forbidden_edges[e] = 1;

  bool have_best = false;
  RatioSwap best;
  const std::vector<int>& verts = tree.vertices();
  for (double budget : budgets) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        int s = verts[i];
        int t = verts[j];
        std::vector<char> forbidden_vertices(inst.vertex_count, 0);
        for (int v : verts) forbidden_vertices[v] = 1;
        forbidden_vertices[s] = forbidden_vertices[t] = 0;
        auto f = constrained_shortest_path(inst.vertex_count, inst.edges, w,
                                           wp, s, t, budget, eps,
                                           forbidden_vertices, forbidden_edges);
        if (!f) continue;
        EdgeMultiset scratch = tree.edge_set();
        for (int e : f->edges) scratch[e] = 1;
        std::vector<int> path = tree.tree_path(s, t);
        // Maximal removable subpaths (same splitting as enumerate_swaps).
        std::vector<SwapMove> candidates;
        {
          WorkingTree& wt = tree;
          std::vector<int> pverts{s};
          int at = s;
          for (int e : path) {
            at = inst.edges[e].u == at ? inst.edges[e].v : inst.edges[e].u;
            pverts.push_back(at);
          }
          std::vector<int> current;
          for (std::size_t k = 0; k < path.size(); ++k) {
            current.push_back(path[k]);
            int end_vertex = pverts[k + 1];
            bool split = k + 1 == path.size() || wt.degree(end_vertex) >= 3 ||
                         inst.is_terminal(end_vertex);
            if (split) {
              SwapMove m;
              m.removed_subpath = current;
              candidates.push_back(std::move(m));
              current.clear();
            }
          }
        }
        for (SwapMove& m : candidates) {
          double wa = 0.0, wpa = 0.0;
          for (int e : m.removed_subpath) {
            wa += w[e];
            wpa += wp[e];
          }
          double gain = wa - f->w_cost;
          if (gain < rho_min) continue;
          if (gain <= 0.0) continue;
          for (int e : m.removed_subpath) scratch[e] = 0;
          bool ok = is_feasible(inst, scratch);
          for (int e : m.removed_subpath) scratch[e] = 1;
          if (!ok) continue;
          m.added_path = f->edges;
          m.added_cost = f->w_cost;
          m.removed_cost = wa;
          m.gain = gain;
          RatioSwap rs;
          rs.move = std::move(m);
          rs.num = f->wp_cost - wpa;
          rs.den = gain;
          if (!have_best || ratio_less(rs, best)) {
            best = std::move(rs);
            have_best = true;
          }
        }
      }
    }
  }

  GreedySwapResult result;
  if (!have_best) {
    result.alg = alg;
    result.stopped = true;
    return result;
  }
  tree.apply(best.move);
  result.alg = tree.edge_set();
  result.stopped = false;
  return result;
}

namespace {

/// Approximate positive gcd of the positive values (tolerance 1e-9); 0 when
/// there are none.
double common_quantum(const CostVector& values) {
  double g = 0.0;
  for (double v : values) {
    if (v <= 1e-12) continue;
    if (g == 0.0) {
      g = v;
      continue;
    }
    double a = std::max(g, v), b = std::min(g, v);
    while (b > 1e-9) {
      double r = std::fmod(a, b);
      if (r > b - 1e-9) r = 0.0;  // fmod landed just below b
      if (r < 1e-9) r = 0.0;
      a = b;
      b = r;
    }
    g = a;
  }
  return g;
}

bool multiples_of(const CostVector& values, double unit) {
  if (unit <= 0.0) return false;
  for (double v : values) {
    double k = std::round(v / unit);
    if (std::abs(v - k * unit) > 1e-9) return false;
  }
  return true;
}

/// Zero-guess branch: local search restricted to the zero-cost subgraph of
/// `zero_under`, optimizing `objective`. Empty when terminals are not
/// connected there.
std::vector<EdgeMultiset> zero_branch(const Instance& inst,
                                      const CostVector& zero_under,
                                      const CostVector& objective,
                                      double ls_eps) {
  std::vector<Edge> sub_edges;
  std::vector<int> back;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (zero_under[e] <= 1e-12) {
      sub_edges.push_back(inst.edges[e]);
      back.push_back(e);
    }
  // Terminal connectivity inside the subgraph.
  UnionFind uf(inst.vertex_count);
  for (const Edge& e : sub_edges) uf.unite(e.u, e.v);
  for (std::size_t i = 1; i < inst.terminals.size(); ++i)
    if (!uf.same(inst.terminals[0], inst.terminals[i])) return {};

  Instance sub = inst;
  sub.edges = sub_edges;
  // The subgraph may be disconnected off the terminal component; restrict
  // local search machinery by running on the sub-instance without the
  // validate() connectivity requirement (feasibility checks do not need it).
  CostVector sub_obj(sub_edges.size());
  for (std::size_t i = 0; i < sub_edges.size(); ++i)
    sub_obj[i] = objective[back[i]];
  EdgeMultiset start = initial_solution(sub, sub_obj);
  EdgeMultiset result = local_search(sub, sub_obj, start, ls_eps);
  EdgeMultiset lifted(inst.edge_count());
  for (std::size_t i = 0; i < back.size(); ++i)
    if (result[i]) lifted[back[i]] = 1;
  return {lifted};
}

}  // namespace

std::vector<EdgeMultiset> double_approx(const Instance& inst,
                                        const CostVector& c,
                                        const CostVector& c_prime, double chi,
                                        double chi_prime,
                                        const RobustParams& params) {
  int n = inst.vertex_count;
  double eps = params.eps;
  if (eps <= 0.0) throw DomainError("double_approx: params.eps must be > 0");
  double ls_eps = std::min(eps, (params.gamma_prime - 1.0) / 2.0);

  if (chi_prime == 0.0) return zero_branch(inst, c_prime, c, ls_eps);
  if (chi == 0.0) return zero_branch(inst, c, c_prime, ls_eps);

  // Granularity precondition: every c'_e on a lattice no coarser than the
  // rho_min of the backward phase, so improving swaps always clear it.
  double unit = eps / n * chi_prime;
  if (!multiples_of(c_prime, unit)) {
    double q = common_quantum(c_prime);
    if (q < unit - 1e-12 || !multiples_of(c_prime, q))
      throw DomainError(
          "double_approx: c' values are not multiples of (eps/n)*chi'");
  }

  std::vector<EdgeMultiset> collection;
  std::map<std::vector<int>, int> seen;
  auto record = [&](const EdgeMultiset& t) {
    if (seen.emplace(t.mult, 1).second) collection.push_back(t);
  };

  // Initial tree: the local search 4(1+eps)-approximation under c', which is
  // an alpha-approximation with alpha < 4*Gamma'.
  EdgeMultiset alg_prev =
      local_search(inst, c_prime, initial_solution(inst, c_prime), ls_eps);
  record(alg_prev);

  double c_max = *std::max_element(c.begin(), c.end());
  double c_min_pos = kInf;
  for (double v : c)
    if (v > 0.0) c_min_pos = std::min(c_min_pos, v);
  std::vector<double> rho_grid;
  if (c_max > 0.0 && c_min_pos < kInf)
    rho_grid = geometric_guess_grid(c_min_pos, n * c_max, eps);

  // Outer iteration cap from the convergence analysis.
  long long outer_cap = 4;
  if (params.eta > 0.0 && !rho_grid.empty())
    outer_cap = 2 * (static_cast<long long>(std::ceil(
                         std::log(n * c_max / c_min_pos) /
                         std::log1p(params.eta))) +
                     1) +
                2;

  double forward_up = (4.0 * params.gamma_prime + params.kappa) * chi_prime;
  double backward_down = 4.0 * params.gamma_prime * chi_prime;
  long long forward_swap_cap = 10LL * n * n + 10;
  long long backward_swap_cap =
      static_cast<long long>(std::ceil((params.kappa + 1.0 + eps) * n / eps)) +
      10;

  double prev_prev_cost = kInf;
  long long outer = 0;
  EdgeMultiset alg_best = alg_prev;
  while (outer == 0 || multiset_cost(alg_best, c) <
                           prev_prev_cost - 1e-12) {
    prev_prev_cost = multiset_cost(alg_prev, c);
    bool have_best = false;
    EdgeMultiset round_best;
    for (double rho : rho_grid) {
      EdgeMultiset alg = alg_prev;
      // Forward phase: spend c' budget to reduce c.
      long long swaps = 0;
      while (multiset_cost(alg, c_prime) <= forward_up &&
             multiset_cost(alg, c) > prev_prev_cost - rho / 2.0) {
        GreedySwapResult step = greedy_swap(inst, alg, c, c_prime, chi_prime,
                                            rho / (10.0 * n * n), eps);
        if (step.stopped) break;
        alg = step.alg;
        record(alg);
        if (++swaps > forward_swap_cap)
          throw Error("double_approx: forward phase exceeded its swap bound");
      }
      // Backward phase: bring c' back below the lower threshold.
      swaps = 0;
      while (multiset_cost(alg, c_prime) >= backward_down) {
        GreedySwapResult step =
            greedy_swap(inst, alg, c_prime, c, chi, eps / n * chi_prime, eps);
        if (step.stopped) break;
        alg = step.alg;
        record(alg);
        if (++swaps > backward_swap_cap)
          throw Error("double_approx: backward phase exceeded its swap bound");
      }
      if (!have_best ||
          multiset_cost(alg, c) < multiset_cost(round_best, c) - 1e-15) {
        round_best = alg;
        have_best = true;
      }
    }
    if (!have_best) break;
    alg_best = round_best;
    alg_prev = round_best;
    outer += 2;
    if (outer > outer_cap) break;
  }
  return collection;
}

}  // namespace robust
