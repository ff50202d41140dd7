#ifndef ROBUST_CUTTING_PLANE_HPP
#define ROBUST_CUTTING_PLANE_HPP

#include "robust/separation.hpp"

namespace robust {

enum class RegretOracleKind { TspMst, SteinerZlb, SteinerGeneral };

struct CuttingPlaneOptions {
  RegretOracleKind oracle = RegretOracleKind::TspMst;
  RobustParams params;    // SteinerGeneral only
  double zlb_eps = 0.05;  // SteinerZlb only
  long long max_iterations = 0;  // 0 = 10 * m * n
};

struct CuttingPlaneResult {
  FractionalPoint point;
  int iterations = 0;
  std::vector<LinearConstraint> rows;  // the full working set, in added order
  int box_rows = 0;
  int degree_rows = 0;
  int link_rows = 0;
  int cut_rows = 0;
  int flow_rows = 0;
  int regret_rows = 0;
};

/// Constraint generation with the bounded simplex core: solve the restricted
/// LP minimizing r, query the standard separation then the regret oracle,
/// add any violated row, stop when both report Feasible. TSP flow variables
/// are instantiated lazily for pairs whose y turned positive.
CuttingPlaneResult cutting_plane_solve(const Instance& inst,
                                       const CuttingPlaneOptions& options);

}  // namespace robust

#endif
