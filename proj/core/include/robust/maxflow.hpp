#ifndef ROBUST_MAXFLOW_HPP
#define ROBUST_MAXFLOW_HPP

#include <vector>

#include "robust/instance.hpp"

namespace robust {

struct MaxFlowResult {
  double value = 0.0;
  std::vector<char> source_side;  // the min-cut set S containing s
};

/// Max flow / min cut between s and t on an undirected graph with the given
/// per-edge capacities (each edge passable in both directions at full
/// capacity). Highest-label push-relabel on doubles with 1e-9 slack; the cut
/// is read off as the residual-reachable set from s.
MaxFlowResult max_flow_min_cut(int vertex_count,
                               const std::vector<Edge>& edges,
                               const CostVector& capacities, int s, int t);

}  // namespace robust

#endif
