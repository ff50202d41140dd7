#include "robust/cutting_plane.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace robust {

namespace {

class Workspace {
 public:
  Workspace(const Instance& inst, const CuttingPlaneOptions& opt)
      : inst_(inst), opt_(opt), pairs_(vertex_pairs(inst.vertex_count)) {
    for (int e = 0; e < inst.edge_count(); ++e)
      column(VarKey::edge_x(e));
    regret_col_ = column(VarKey::regret());
    if (inst.kind == Kind::Tsp)
      for (auto [u, v] : pairs_) column(VarKey::pair_y(u, v));

    // Box rows (folded into bounds by the solver's presolve).
    double x_cap = inst.kind == Kind::Tsp ? 2.0 : 1.0;
    for (int e = 0; e < inst.edge_count(); ++e)
      add_row(box_row(VarKey::edge_x(e), x_cap));
    if (inst.kind == Kind::Tsp) {
      for (auto [u, v] : pairs_) add_row(box_row(VarKey::pair_y(u, v), 1.0));
      for (int u = 0; u < inst.vertex_count; ++u) {
        LinearConstraint c;
        c.origin = ConstraintOrigin::DegreeConstraint;
        c.sense = Sense::Equal;
        c.rhs = 2.0;
        c.pair = {u, -1};
        for (int v = 0; v < inst.vertex_count; ++v)
          if (v != u)
            c.terms.push_back(
                {VarKey::pair_y(std::min(u, v), std::max(u, v)), 1.0});
        add_row(c);
      }
      // Aggregation rows x_e = sum of the pair flows on e; flow terms are
      // appended as pairs activate.
      link_row_of_.assign(inst.edge_count(), -1);
      for (int e = 0; e < inst.edge_count(); ++e) {
        LinearConstraint c;
        c.origin = ConstraintOrigin::LinkConstraint;
        c.sense = Sense::Equal;
        c.rhs = 0.0;
        c.terms.push_back({VarKey::edge_x(e), 1.0});
        link_row_of_[e] = static_cast<int>(rows_.size());
        add_row(c);
      }
      flow_active_.assign(pairs_.size(), 0);
    }
  }

  CuttingPlaneResult solve() {
    long long cap = opt_.max_iterations > 0
                        ? opt_.max_iterations
                        : 10LL * std::max(1, inst_.edge_count()) *
                              inst_.vertex_count;
    CuttingPlaneResult result;
    for (long long iter = 1; iter <= cap; ++iter) {
      result.iterations = static_cast<int>(iter);
      FractionalPoint point = solve_restricted();
      if (inst_.kind == Kind::Tsp) activate_pairs(point);

      SeparationResult sep =
          inst_.kind == Kind::Tsp
              ? separate_tsp_constraints(inst_, point)
              : separate_steiner_cuts(inst_, point.x);
      if (!sep.feasible) {
        add_row(sep.constraint);
        continue;
      }
      switch (opt_.oracle) {
        case RegretOracleKind::TspMst:
          sep = rrtsp_oracle(inst_, point);
          break;
        case RegretOracleKind::SteinerZlb:
          sep = rrst_oracle_zlb(inst_, point.x, point.r, opt_.zlb_eps);
          break;
        case RegretOracleKind::SteinerGeneral:
          sep = rrst_oracle(inst_, point.x, point.r, opt_.params);
          break;
      }
      if (!sep.feasible) {
        add_row(sep.constraint);
        continue;
      }
      result.point = point;
      finalize(result);
      return result;
    }
    throw CapError("cutting_plane_solve: iteration cap exceeded");
  }

 private:
  int column(const VarKey& key) {
    auto it = col_of_.find(key);
    if (it != col_of_.end()) return it->second;
    int idx = static_cast<int>(columns_.size());
    columns_.push_back(key);
    col_of_.emplace(key, idx);
    return idx;
  }

  static LinearConstraint box_row(const VarKey& key, double cap) {
    LinearConstraint c;
    c.origin = ConstraintOrigin::BoxConstraint;
    c.sense = Sense::LessEq;
    c.rhs = cap;
    c.terms.push_back({key, 1.0});
    return c;
  }

  void add_row(const LinearConstraint& c) {
    // A separation routine returning a row that is already in the working
    // set means the tolerances are mis-ordered; surface it instead of
    // looping forever.
    std::vector<std::pair<VarKey, double>> signature = c.terms;
    std::sort(signature.begin(), signature.end());
    auto key = std::make_tuple(signature, static_cast<int>(c.sense), c.rhs);
    if (c.origin != ConstraintOrigin::LinkConstraint &&
        !row_signatures_.insert(key).second)
      throw SolveError("cutting_plane_solve: duplicate constraint generated");
    rows_.push_back(c);
  }

  FractionalPoint solve_restricted() {
    std::vector<DenseRow> dense;
    dense.reserve(rows_.size());
    for (const LinearConstraint& c : rows_) {
      DenseRow row;
      row.sense = c.sense;
      row.rhs = c.rhs;
      for (const auto& [key, coef] : c.terms)
        row.terms.push_back({column(key), coef});
      dense.push_back(std::move(row));
    }
    std::vector<double> objective(columns_.size(), 0.0);
    objective[regret_col_] = 1.0;
    LpResult res =
        simplex_solve(static_cast<int>(columns_.size()), dense, objective);
    if (res.status == LpStatus::Infeasible)
      throw SolveError(
          "cutting_plane_solve: restricted LP infeasible (the MRS indicator "
          "is always feasible, so this signals a bug)");
    if (res.status == LpStatus::Unbounded)
      throw SolveError("cutting_plane_solve: restricted LP unbounded");
    if (res.status == LpStatus::PivotCap)
      throw SolveError("cutting_plane_solve: simplex pivot cap exceeded");

    FractionalPoint point;
    point.x.assign(inst_.edge_count(), 0.0);
    for (int e = 0; e < inst_.edge_count(); ++e)
      point.x[e] = res.x[col_of_.at(VarKey::edge_x(e))];
    point.r = res.x[regret_col_];
    if (inst_.kind == Kind::Tsp) {
      point.y.assign(pairs_.size(), 0.0);
      point.flow.assign(pairs_.size(), {});
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        point.y[p] =
            res.x[col_of_.at(VarKey::pair_y(pairs_[p].first,
                                            pairs_[p].second))];
        if (flow_active_[p]) {
          point.flow[p].assign(inst_.edge_count(), 0.0);
          for (int e = 0; e < inst_.edge_count(); ++e)
            point.flow[p][e] = res.x[col_of_.at(
                VarKey::flow_x(e, pairs_[p].first, pairs_[p].second))];
        }
      }
    }
    return point;
  }

  void activate_pairs(FractionalPoint& point) {
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (flow_active_[p] || point.y[p] <= 1e-7) continue;
      flow_active_[p] = 1;
      auto [u, v] = pairs_[p];
      for (int e = 0; e < inst_.edge_count(); ++e) {
        VarKey key = VarKey::flow_x(e, u, v);
        column(key);
        add_row(box_row(key, 1.0));
        rows_[link_row_of_[e]].terms.push_back({key, -1.0});
      }
      point.flow[p].assign(inst_.edge_count(), 0.0);
    }
  }

  void finalize(CuttingPlaneResult& result) {
    result.rows = rows_;
    for (const LinearConstraint& c : rows_) {
      switch (c.origin) {
        case ConstraintOrigin::BoxConstraint: ++result.box_rows; break;
        case ConstraintOrigin::DegreeConstraint: ++result.degree_rows; break;
        case ConstraintOrigin::LinkConstraint: ++result.link_rows; break;
        case ConstraintOrigin::CutConstraint: ++result.cut_rows; break;
        case ConstraintOrigin::FlowConstraint: ++result.flow_rows; break;
        case ConstraintOrigin::RegretConstraint: ++result.regret_rows; break;
      }
    }
  }

  const Instance& inst_;
  const CuttingPlaneOptions& opt_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<VarKey> columns_;
  std::map<VarKey, int> col_of_;
  int regret_col_ = -1;
  std::vector<LinearConstraint> rows_;
  std::set<std::tuple<std::vector<std::pair<VarKey, double>>, int, double>>
      row_signatures_;
  std::vector<int> link_row_of_;
  std::vector<char> flow_active_;
};

}  // namespace

CuttingPlaneResult cutting_plane_solve(const Instance& inst,
                                       const CuttingPlaneOptions& options) {
  validate(inst);
  Workspace ws(inst, options);
  return ws.solve();
}

}  // namespace robust
