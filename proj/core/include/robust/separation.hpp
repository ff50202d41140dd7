#ifndef ROBUST_SEPARATION_HPP
#define ROBUST_SEPARATION_HPP

#include <optional>
#include <vector>

#include "robust/double_approx.hpp"
#include "robust/instance.hpp"
#include "robust/lp.hpp"

namespace robust {

/// Violation threshold for oracle verdicts. One order looser than the LP
/// feasibility tolerance so solver and oracle cannot ping-pong.
inline constexpr double kOracleTol = 1e-6;
/// Threshold for the exact standard-polytope separations.
inline constexpr double kCutTol = 1e-7;

struct SeparationResult {
  bool feasible = true;
  LinearConstraint constraint;       // meaningful when !feasible
  double violation_amount = 0.0;

  static SeparationResult ok() { return {}; }
  static SeparationResult violated(LinearConstraint c, double amount) {
    return {false, std::move(c), amount};
  }
};

/// Unordered vertex pairs (u < v) in lexicographic order; the canonical
/// variable order for the TSP LP's y and flow variables.
std::vector<std::pair<int, int>> vertex_pairs(int vertex_count);
int pair_index(int vertex_count, int u, int v);

/// A fractional point of either LP. For the Steiner LP only x and r are
/// used; the TSP LP adds y per pair and flows per active pair (an empty
/// per-pair flow vector means the pair is not instantiated: all zero).
struct FractionalPoint {
  std::vector<double> x;  // per edge (TSP: aggregated)
  double r = 0.0;
  std::vector<double> y;                  // per pair
  std::vector<std::vector<double>> flow;  // [pair][edge]; empty = inactive
};

/// Steiner cut separation: min cut between terminal pairs under capacities
/// x; a cut below 1 - kCutTol is returned (first pair in lexicographic
/// order).
SeparationResult separate_steiner_cuts(const Instance& inst,
                                       const std::vector<double>& x);

/// TSP standard-polytope separation in fixed order: degree equalities, then
/// the y cut constraints (global min cut of the complete graph under y),
/// then per-pair flow cuts.
SeparationResult separate_tsp_constraints(const Instance& inst,
                                          const FractionalPoint& point);

/// Regret separation for TSP: minimum spanning tree under
/// u_e x_e - l_e x_e + 2 l_e; a Feasible verdict certifies
/// sum d_e x_e <= 2 opt(d) + r for every realization d.
SeparationResult rrtsp_oracle(const Instance& inst,
                              const FractionalPoint& point);

/// Regret separation for Steiner instances with all lower bounds zero: the
/// path-swap local search on weights u_e x_e. Feasible certifies
/// sum d_e x_e <= opt(d) + (4+eps) r.
SeparationResult rrst_oracle_zlb(const Instance& inst,
                                 const std::vector<double>& x, double r,
                                 double eps);

/// General Steiner regret separation: DoubleApprox over the (chi, chi')
/// guess grids on the derived weights. Feasible certifies
/// sum d_e x_e <= alpha opt(d) + beta r with the params' constants.
/// Requires maincond_holds(params).
SeparationResult rrst_oracle(const Instance& inst,
                             const std::vector<double>& x, double r,
                             const RobustParams& params);

/// Rebuilds a constraint row from its provenance witness alone; the
/// oracle-soundness property asserts this reproduces the stored row.
LinearConstraint rebuild_from_witness(const Instance& inst,
                                      const LinearConstraint& c);

}  // namespace robust

#endif
