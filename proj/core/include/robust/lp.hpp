#ifndef ROBUST_LP_HPP
#define ROBUST_LP_HPP

#include <compare>
#include <functional>
#include <utility>
#include <vector>

#include "robust/instance.hpp"

namespace robust {

enum class Sense { LessEq, GreaterEq, Equal };

enum class ConstraintOrigin {
  CutConstraint,
  DegreeConstraint,
  FlowConstraint,
  BoxConstraint,
  RegretConstraint,
  LinkConstraint,  // x_e = sum of its pair flows (TSP bookkeeping)
};

/// Symbolic LP variable: per-edge aggregate x_e, the regret variable r, a
/// pair connectivity variable y_{uv}, or a per-pair flow x_{e,u,v}.
struct VarKey {
  enum class Type { EdgeX, Regret, PairY, FlowX };
  Type type = Type::Regret;
  int edge = -1;
  int u = -1;  // pair endpoints, u < v
  int v = -1;

  auto operator<=>(const VarKey&) const = default;

  static VarKey edge_x(int e) { return {Type::EdgeX, e, -1, -1}; }
  static VarKey regret() { return {Type::Regret, -1, -1, -1}; }
  static VarKey pair_y(int u, int v) { return {Type::PairY, -1, u, v}; }
  static VarKey flow_x(int e, int u, int v) { return {Type::FlowX, e, u, v}; }
};

/// One LP row with provenance. The provenance witness carries enough data to
/// reproduce the row from scratch (tested as the oracle-soundness property).
struct LinearConstraint {
  std::vector<std::pair<VarKey, double>> terms;
  Sense sense = Sense::LessEq;
  double rhs = 0.0;
  ConstraintOrigin origin = ConstraintOrigin::BoxConstraint;

  // Witness payloads by origin:
  std::vector<int> cut_set;               // Cut / Flow: the vertex set S
  std::pair<int, int> pair{-1, -1};       // Flow: the (u,v) pair; Degree: (u,-1)
  EdgeMultiset adversary;                 // Regret: adversary multiset
  Realization realization;                // Regret: adversarial realization
};

/// Value of the row's left side under a point.
double evaluate(const LinearConstraint& c,
                const std::function<double(const VarKey&)>& value);

/// Positive amount by which the point violates the row (0 when satisfied).
double violation(const LinearConstraint& c,
                 const std::function<double(const VarKey&)>& value);

// Dense solver layer. All variables are nonnegative; single-variable rows
// with positive coefficient are folded into bounds during presolve, so box
// constraints may be passed as ordinary rows.
struct DenseRow {
  std::vector<std::pair<int, double>> terms;
  Sense sense = Sense::LessEq;
  double rhs = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, PivotCap };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;
  double objective = 0.0;
  long long pivots = 0;
};

/// Two-phase primal simplex over nonnegative bounded variables with Bland's
/// anti-cycling rule; deterministic given input order. Minimizes.
LpResult simplex_solve(int var_count, const std::vector<DenseRow>& rows,
                       const std::vector<double>& objective,
                       long long pivot_cap = 1000000);

}  // namespace robust

#endif
