#ifndef ROBUST_GENERATORS_HPP
#define ROBUST_GENERATORS_HPP

#include "robust/instance.hpp"
#include "robust/rng.hpp"

namespace robust {

/// The hub-and-cycle family on which the doubled midpoint-MST tour fails to
/// be robust: a hub joined to n rim vertices by fixed-length spokes of
/// length 1-eps ("type-1"), and a rim cycle of n interval edges
/// [0, 2 - 1/(n-1)] ("type-2"). TSP kind. Requires n >= 3, 0 < eps < 1.
Instance gen_failure_instance(int n, double eps);

/// Spoke-only doubled star (every type-1 edge twice): the tour the midpoint
/// heuristic picks on the failure instance.
EdgeMultiset failure_doubled_star(const Instance& failure_inst);

/// Rim tour: the cycle through v1..vn entered and left through the hub
/// (n-1 type-2 edges and two type-1 edges); witnesses MR <= n*eps.
EdgeMultiset failure_cycle_solution(const Instance& failure_inst);

struct RandomInstanceSpec {
  std::uint64_t seed = 1;
  int vertex_count = 6;
  int edge_count = 9;
  double terminal_density = 0.5;  // Steiner only
  double max_magnitude = 8.0;     // bounds drawn from {0, 1/8, ..., 1} * mag
  Kind kind = Kind::SteinerTree;
};

/// Connected reproducible random instance: a random attachment tree plus
/// uniform extra edges (parallel edges allowed, self-loops excluded); bounds
/// are eighths of max_magnitude with lo <= hi by swap.
Instance gen_random(const RandomInstanceSpec& spec);

/// Uniform random labelled tree (Pruefer decoding); edges as (u,v) pairs.
std::vector<Edge> random_tree(int vertex_count, SplitMix64& rng);

}  // namespace robust

#endif
