#ifndef ROBUST_DOUBLE_APPROX_HPP
#define ROBUST_DOUBLE_APPROX_HPP

#include <optional>
#include <vector>

#include "robust/instance.hpp"

namespace robust {

/// The constant bundle for the two-cost Steiner machinery:
///   zeta' = 4(1+eps)G' / [(sqrt(G')-1)(sqrt(G')-1-eps)(4G'-1)(4G-1)]
///   alpha = (4G'+kappa+2+eps)*4G + 1,  beta = 4G
///   eta   = [min{(4G-1)/8G, (4G-1)(sqrt(G)-1)(sqrt(G)-1-eps)kappa/(16(1+eps)G^2)}
///            - (e^{zeta'(4G'+kappa+1+eps)}-1)]
///           / [1 + ((4G-1)/4G)(e^{zeta'(4G'+kappa+1+eps)}-1)]
struct RobustParams {
  double gamma = 0.0;        // Gamma > 1
  double gamma_prime = 0.0;  // Gamma' > 1
  double kappa = 0.0;        // kappa > 0
  double eps = 0.0;          // 0 <= eps < 4/35 (0 is the limit point)
  double zeta_prime = 0.0;
  double eta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Fills the derived constants. Throws DomainError outside the domain.
RobustParams derive_constants(double gamma, double gamma_prime, double kappa,
                              double eps);

/// The net-decrease expression whose positivity the convergence analysis
/// needs: min{...} - (e^{zeta'(4G'+kappa+1+eps)} - 1).
double maincond_value(const RobustParams& p);

/// True iff the parameters lie in the analysis domain (eps below both
/// sqrt(Gamma)-1 and sqrt(Gamma')-1) and maincond_value > 0.
bool maincond_holds(const RobustParams& p);

/// Preset from the paper's alpha-optimization (9.284, 5.621, 2.241, 0.001).
/// Note: this point does NOT satisfy maincond as printed; see README.
RobustParams paper_optimal_params();

/// Preset with comfortable maincond slack for quick runs: (16, 6, 4, 0.05).
RobustParams fast_params();

/// One (chi, chi') guess pair: chi brackets c(sol), chi' brackets c'(sol).
struct GuessGrid {
  double chi = 0.0;
  double chi_prime = 0.0;
};

/// Geometric grid {base*(1+eps)^k} from base up to the first value >= top.
std::vector<double> geometric_guess_grid(double base, double top, double eps);

struct ConstrainedPath {
  std::vector<int> edges;
  double w_cost = 0.0;   // true cost under w
  double wp_cost = 0.0;  // true cost under w'
};

/// Budgeted shortest path: minimize w subject to w'(path) <= budget, via the
/// dynamic program that rounds each w'_e down to the nearest multiple of
/// eps*budget/|V|. The result's w-cost never exceeds the w-cost of the best
/// path within the true budget, and its w'-cost is at most (1+eps)*budget.
/// With eps = 0 the computation is exact (Pareto label search). Vertices
/// marked in forbidden_vertices are never entered (s must not be marked; t
/// may be the path's endpoint only if unmarked); forbidden_edges are skipped.
/// Returns nullopt when no path exists within the (rounded) budget.
std::optional<ConstrainedPath> constrained_shortest_path(
    int vertex_count, const std::vector<Edge>& edges, const CostVector& w,
    const CostVector& wp, int s, int t, double budget, double eps,
    const std::vector<char>& forbidden_vertices = {},
    const std::vector<char>& forbidden_edges = {});

struct GreedySwapResult {
  EdgeMultiset alg;
  bool stopped = false;  // no qualifying swap existed
};

/// One step of the two-cost greedy local search: over all budget levels
/// W' in {0} u {(eps/n)*chi_cap*(1+eps)^k} up to chi_cap and all tree-vertex
/// pairs, collect swaps whose w-gain is at least rho_min, then apply the one
/// minimizing (w'(f)-w'(a)) / (w(a)-w(f)) (cross-multiplied comparisons).
GreedySwapResult greedy_swap(const Instance& inst, const EdgeMultiset& alg,
                             const CostVector& w, const CostVector& wp,
                             double chi_cap, double rho_min, double eps);

/// The forward/backward alternate-minimization driver. Requires every c'_e
/// to be a multiple of (eps/n)*chi_prime, or of a common quantum at least
/// that large (so the rho_min filter never blocks an improving swap).
/// Returns every intermediate tree (deduplicated, first-seen order).
/// chi_prime = 0 and chi = 0 are handled by dedicated branches that restrict
/// the search to the zero-cost subgraph.
std::vector<EdgeMultiset> double_approx(const Instance& inst,
                                        const CostVector& c,
                                        const CostVector& c_prime, double chi,
                                        double chi_prime,
                                        const RobustParams& params);

}  // namespace robust

#endif
