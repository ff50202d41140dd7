#ifndef ROBUST_ROUNDING_HPP
#define ROBUST_ROUNDING_HPP

#include "robust/instance.hpp"

namespace robust {

/// Rounding transform parameters: gamma = approximation factor of the
/// integral subroutine, delta = integrality gap of the base LP. The
/// composed guarantee is (gamma*delta*alpha, gamma*delta*beta + gamma).
struct RoundingParams {
  double gamma = 2.0;
  double delta = 2.0;

  static RoundingParams steiner_defaults() { return {2.0, 2.0}; }
  static RoundingParams tsp_defaults() { return {2.0, 1.5}; }
};

/// Minimum spanning tree, Kruskal with (weight, edge index) ordering.
/// Throws ValidationError on disconnected graphs.
EdgeMultiset mst(int vertex_count, const std::vector<Edge>& edges,
                 const CostVector& weights);

/// Double-tree TSP 2-approximation: every MST edge with multiplicity 2.
EdgeMultiset double_tree_tsp(const Instance& inst, const CostVector& weights);

/// Metric-closure MST Steiner 2-approximation: MST over the terminal
/// closure, re-expanded to graph edges, reduced to a tree and pruned.
EdgeMultiset steiner_2approx(const Instance& inst, const CostVector& weights);

/// Per-edge weights of the derived rounding instance:
///   max{u_e(1 - delta x_e), l_e(1 - delta x_e)} + delta l_e x_e.
CostVector rounding_weights(const Instance& inst, const std::vector<double>& x,
                            double delta);

/// Runs the kind-appropriate gamma-approximation on rounding_weights(x).
EdgeMultiset round_robust(const Instance& inst, const std::vector<double>& x,
                          const RoundingParams& params);

}  // namespace robust

#endif
