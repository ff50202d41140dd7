#ifndef ROBUST_LOCAL_SEARCH_HPP
#define ROBUST_LOCAL_SEARCH_HPP

#include <vector>

#include "robust/instance.hpp"

namespace robust {

/// One candidate path swap on a Steiner tree: add the outside path
/// `added_path` (endpoints in the tree, internal vertices outside it) and
/// remove the subpath `removed_subpath` of the induced cycle.
struct SwapMove {
  std::vector<int> added_path;      // edge indices, ordered along the path
  std::vector<int> removed_subpath; // edge indices
  double gain = 0.0;                // w(removed) - w(added)
  double added_cost = 0.0;
  double removed_cost = 0.0;
};

/// A Steiner tree being improved in place. Tracks membership and degrees.
class WorkingTree {
 public:
  WorkingTree(const Instance& inst, const EdgeMultiset& start);

  const EdgeMultiset& edge_set() const { return edges_; }
  bool has_edge(int e) const { return edges_[e] != 0; }
  bool has_vertex(int v) const { return in_tree_[v] != 0; }
  int degree(int v) const { return degree_[v]; }
  const std::vector<int>& vertices() const { return vertex_list_; }

  double cost(const CostVector& w) const;

  /// Applies a swap, then prunes non-terminal leaves.
  void apply(const SwapMove& move);

  /// The unique tree path between two tree vertices (edge indices).
  std::vector<int> tree_path(int s, int t) const;

  const Instance& instance() const { return inst_; }

 private:
  void rebuild_membership();

  const Instance& inst_;
  EdgeMultiset edges_;
  std::vector<char> in_tree_;
  std::vector<int> degree_;
  std::vector<int> vertex_list_;
};

/// All candidate swaps for the current tree under weights w: for every pair
/// of tree vertices (u,v), the shortest path between them whose internal
/// vertices lie outside the tree (ties broken by path length, then
/// lexicographic vertex sequence), combined with every maximal removable
/// subpath of the induced cycle. The cycle is split at vertices of degree
/// >= 3 in tree+path and at internal terminals (removal through a degree-2
/// terminal always disconnects it); every emitted candidate is verified to
/// keep the tree feasible.
std::vector<SwapMove> enumerate_swaps(const Instance& inst,
                                      const CostVector& weights,
                                      const WorkingTree& tree);

/// Union of shortest paths between terminal pairs, reduced to a tree and
/// pruned. Cost lies between opt and n^2 * opt.
EdgeMultiset initial_solution(const Instance& inst, const CostVector& weights);

struct LocalSearchStats {
  int swaps = 0;
  long long candidates = 0;
};

/// Path-swap local search with the relative improvement rule: a swap
/// qualifies when its gain is at least (eps/4) * w(removed subpath) and the
/// qualifying swap with the largest gain is applied. At termination no
/// qualifying swap exists, which yields both the 4(1+eps) approximation
/// factor and the (4+eps) difference approximation against any fixed tree.
EdgeMultiset local_search(const Instance& inst, const CostVector& weights,
                          const EdgeMultiset& start, double eps,
                          LocalSearchStats* stats = nullptr);

}  // namespace robust

#endif
