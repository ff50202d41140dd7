#include "robust/separation.hpp"

#include <algorithm>
#include <cmath>

#include "robust/local_search.hpp"
#include "robust/maxflow.hpp"
#include "robust/rounding.hpp"

namespace robust {

std::vector<std::pair<int, int>> vertex_pairs(int vertex_count) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < vertex_count; ++u)
    for (int v = u + 1; v < vertex_count; ++v) pairs.push_back({u, v});
  return pairs;
}

int pair_index(int vertex_count, int u, int v) {
  if (u > v) std::swap(u, v);
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),... in order.
  return u * vertex_count - u * (u + 1) / 2 + (v - u - 1);
}

namespace {

LinearConstraint steiner_cut_row(const Instance& inst,
                                 const std::vector<char>& side) {
  LinearConstraint c;
  c.origin = ConstraintOrigin::CutConstraint;
  c.sense = Sense::GreaterEq;
  c.rhs = 1.0;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (side[inst.edges[e].u] != side[inst.edges[e].v])
      c.terms.push_back({VarKey::edge_x(e), 1.0});
  for (int v = 0; v < inst.vertex_count; ++v)
    if (side[v]) c.cut_set.push_back(v);
  return c;
}

LinearConstraint tsp_cut_row(const Instance& inst,
                             const std::vector<char>& side) {
  LinearConstraint c;
  c.origin = ConstraintOrigin::CutConstraint;
  c.sense = Sense::GreaterEq;
  c.rhs = 2.0;
  for (auto [u, v] : vertex_pairs(inst.vertex_count))
    if (side[u] != side[v]) c.terms.push_back({VarKey::pair_y(u, v), 1.0});
  for (int v = 0; v < inst.vertex_count; ++v)
    if (side[v]) c.cut_set.push_back(v);
  return c;
}

LinearConstraint flow_cut_row(const Instance& inst, int u, int v,
                              const std::vector<char>& side) {
  LinearConstraint c;
  c.origin = ConstraintOrigin::FlowConstraint;
  c.sense = Sense::GreaterEq;
  c.rhs = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (side[inst.edges[e].u] != side[inst.edges[e].v])
      c.terms.push_back({VarKey::flow_x(e, u, v), 1.0});
  c.terms.push_back({VarKey::pair_y(u, v), -1.0});
  c.pair = {u, v};
  for (int w = 0; w < inst.vertex_count; ++w)
    if (side[w]) c.cut_set.push_back(w);
  return c;
}

/// Regret row for an integral adversary at its adversarial realization:
/// sum_e d_e x_e - r <= adversary(d).
LinearConstraint regret_row(const Instance& inst, const EdgeMultiset& adv,
                            const Realization& d) {
  LinearConstraint c;
  c.origin = ConstraintOrigin::RegretConstraint;
  c.sense = Sense::LessEq;
  c.rhs = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e) {
    c.rhs += adv[e] * d[e];
    if (d[e] != 0.0) c.terms.push_back({VarKey::edge_x(e), d[e]});
  }
  c.terms.push_back({VarKey::regret(), -1.0});
  c.adversary = adv;
  c.realization = d;
  return c;
}

}  // namespace

SeparationResult separate_steiner_cuts(const Instance& inst,
                                       const std::vector<double>& x) {
  const auto& T = inst.terminals;
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      MaxFlowResult mf =
          max_flow_min_cut(inst.vertex_count, inst.edges, x, T[i], T[j]);
      if (mf.value < 1.0 - kCutTol)
        return SeparationResult::violated(steiner_cut_row(inst, mf.source_side),
                                          1.0 - mf.value);
    }
  return SeparationResult::ok();
}

SeparationResult separate_tsp_constraints(const Instance& inst,
                                          const FractionalPoint& point) {
  int n = inst.vertex_count;
  auto pairs = vertex_pairs(n);

  // Degree equalities, checked explicitly.
  for (int u = 0; u < n; ++u) {
    double sum = 0.0;
    for (int v = 0; v < n; ++v)
      if (v != u) sum += point.y[pair_index(n, u, v)];
    if (std::abs(sum - 2.0) > kCutTol) {
      LinearConstraint c;
      c.origin = ConstraintOrigin::DegreeConstraint;
      c.sense = Sense::Equal;
      c.rhs = 2.0;
      c.pair = {u, -1};
      for (int v = 0; v < n; ++v)
        if (v != u)
          c.terms.push_back({VarKey::pair_y(std::min(u, v), std::max(u, v)),
                             1.0});
      return SeparationResult::violated(c, std::abs(sum - 2.0));
    }
  }

  // Subtour cuts: global min cut of the complete graph weighted by y,
  // probed as min over t of mincut(0, t).
  {
    std::vector<Edge> complete;
    CostVector caps;
    for (auto [u, v] : pairs) {
      complete.push_back({u, v, 0.0, 0.0});
      caps.push_back(point.y[pair_index(n, u, v)]);
    }
    double best = 2.0;
    std::vector<char> best_side;
    for (int t = 1; t < n; ++t) {
      MaxFlowResult mf = max_flow_min_cut(n, complete, caps, 0, t);
      if (mf.value < best) {
        best = mf.value;
        best_side = mf.source_side;
      }
    }
    if (best < 2.0 - kCutTol)
      return SeparationResult::violated(tsp_cut_row(inst, best_side),
                                        2.0 - best);
  }

  // Flow cuts per pair, in pair order; missing flow vectors count as zero.
  for (auto [u, v] : pairs) {
    int p = pair_index(n, u, v);
    double yp = point.y[p];
    if (yp <= kCutTol) continue;
    static const std::vector<double> kNoFlow;
    const std::vector<double>& f =
        static_cast<std::size_t>(p) < point.flow.size() ? point.flow[p]
                                                        : kNoFlow;
    MaxFlowResult mf;
    if (f.empty()) {
      mf.value = 0.0;
      mf.source_side.assign(n, 0);
      mf.source_side[u] = 1;
    } else {
      mf = max_flow_min_cut(inst.vertex_count, inst.edges, f, u, v);
    }
    if (mf.value < yp - kCutTol)
      return SeparationResult::violated(flow_cut_row(inst, u, v,
                                                     mf.source_side),
                                        yp - mf.value);
  }
  return SeparationResult::ok();
}

SeparationResult rrtsp_oracle(const Instance& inst,
                              const FractionalPoint& point) {
  const std::vector<double>& x = point.x;
  CostVector w(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e)
    w[e] = inst.edges[e].hi * x[e] - inst.edges[e].lo * x[e] +
           2.0 * inst.edges[e].lo;
  EdgeMultiset tree = mst(inst.vertex_count, inst.edges, w);

  double expr = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e) {
    if (tree[e])
      expr += inst.edges[e].lo * x[e] - 2.0 * inst.edges[e].lo;
    else
      expr += inst.edges[e].hi * x[e];
  }
  if (expr <= point.r + kOracleTol) return SeparationResult::ok();

  EdgeMultiset doubled = tree;
  Realization d(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e) {
    doubled[e] = tree[e] ? 2 : 0;
    d[e] = tree[e] ? inst.edges[e].lo : inst.edges[e].hi;
  }
  return SeparationResult::violated(regret_row(inst, doubled, d),
                                    expr - point.r);
}

SeparationResult rrst_oracle_zlb(const Instance& inst,
                                 const std::vector<double>& x, double r,
                                 double eps) {
  for (const Edge& e : inst.edges)
    if (e.lo != 0.0)
      throw DomainError("rrst_oracle_zlb: requires all lower bounds zero");
  CostVector w(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e) w[e] = inst.edges[e].hi * x[e];
  EdgeMultiset tree = local_search(inst, w, initial_solution(inst, w), eps);

  double expr = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (!tree[e]) expr += inst.edges[e].hi * x[e];
  if (expr <= r + kOracleTol) return SeparationResult::ok();

  Realization d(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e)
    d[e] = tree[e] ? 0.0 : inst.edges[e].hi;
  return SeparationResult::violated(regret_row(inst, tree, d), expr - r);
}

SeparationResult rrst_oracle(const Instance& inst,
                             const std::vector<double>& x, double r,
                             const RobustParams& params) {
  if (!maincond_holds(params))
    throw DomainError("rrst_oracle: params do not satisfy the net-decrease "
                      "condition");
  auto [c, cp] = derived_weights(inst, x);
  int n = inst.vertex_count;

  auto grid_for = [&](const CostVector& w) {
    std::vector<double> grid{0.0};
    double wmax = *std::max_element(w.begin(), w.end());
    double wmin_pos = 0.0;
    for (double v : w)
      if (v > 0.0 && (wmin_pos == 0.0 || v < wmin_pos)) wmin_pos = v;
    if (wmax > 0.0 && wmin_pos > 0.0)
      for (double g : geometric_guess_grid(wmin_pos, n * wmax, params.eps))
        grid.push_back(g);
    return grid;
  };
  std::vector<double> chi_grid = grid_for(c);
  std::vector<double> chip_grid = grid_for(cp);

  auto regret_expr = [&](const EdgeMultiset& tree) {
    double expr = 0.0;
    for (int e = 0; e < inst.edge_count(); ++e) {
      if (tree[e])
        expr += inst.edges[e].lo * x[e] - inst.edges[e].lo;
      else
        expr += inst.edges[e].hi * x[e];
    }
    return expr;
  };

  for (double chi : chi_grid) {
    for (double chip : chip_grid) {
      CostVector cp_rounded = cp;
      if (chip > 0.0) {
        double unit = params.eps / n * chip;
        for (double& v : cp_rounded)
          v = std::ceil(v / unit - 1e-12) * unit;
      }
      std::vector<EdgeMultiset> trees;
      try {
        trees = double_approx(inst, c, cp_rounded, chi, chip, params);
      } catch (const DomainError&) {
        continue;  // granularity cannot hold for this guess; skip it
      }
      for (const EdgeMultiset& tree : trees) {
        double expr = regret_expr(tree);
        if (expr > r + kOracleTol) {
          Realization d(inst.edge_count());
          for (int e = 0; e < inst.edge_count(); ++e)
            d[e] = tree[e] ? inst.edges[e].lo : inst.edges[e].hi;
          return SeparationResult::violated(regret_row(inst, tree, d),
                                            expr - r);
        }
      }
    }
  }
  return SeparationResult::ok();
}

LinearConstraint rebuild_from_witness(const Instance& inst,
                                      const LinearConstraint& c) {
  std::vector<char> side(inst.vertex_count, 0);
  for (int v : c.cut_set) side[v] = 1;
  switch (c.origin) {
    case ConstraintOrigin::CutConstraint:
      return inst.kind == Kind::SteinerTree ? steiner_cut_row(inst, side)
                                            : tsp_cut_row(inst, side);
    case ConstraintOrigin::FlowConstraint:
      return flow_cut_row(inst, c.pair.first, c.pair.second, side);
    case ConstraintOrigin::RegretConstraint:
      return regret_row(inst, c.adversary, c.realization);
    case ConstraintOrigin::DegreeConstraint: {
      LinearConstraint d;
      d.origin = ConstraintOrigin::DegreeConstraint;
      d.sense = Sense::Equal;
      d.rhs = 2.0;
      d.pair = c.pair;
      int u = c.pair.first;
      for (int v = 0; v < inst.vertex_count; ++v)
        if (v != u)
          d.terms.push_back({VarKey::pair_y(std::min(u, v), std::max(u, v)),
                             1.0});
      return d;
    }
    default:
      return c;  // box/link rows carry no witness
  }
}

}  // namespace robust
