#ifndef ROBUST_EXACT_HPP
#define ROBUST_EXACT_HPP

#include <functional>
#include <utility>
#include <vector>

#include "robust/instance.hpp"

namespace robust {

// Enumeration caps. Oracles raise CapError instead of truncating.
inline constexpr int kMaxSteinerTerminals = 12;  // Dreyfus-Wagner 3^|T| table
inline constexpr int kMaxTspVertices = 12;       // Held-Karp 2^n table
inline constexpr int kMaxSweepFreeEdges = 20;    // 2^f box vertices
inline constexpr int kMaxEnumEdges = 20;         // solution enumeration

/// Minimum-cost Steiner tree under lengths d (Dreyfus-Wagner dynamic program
/// over terminal subsets). Requires |terminals| <= kMaxSteinerTerminals.
std::pair<double, EdgeMultiset> opt_steiner(const Instance& inst,
                                            const Realization& d);

/// Minimum-cost closed walk through all vertices under lengths d (Held-Karp
/// on the metric closure, closure edges re-expanded to shortest paths with
/// lowest-edge-index tie-breaking). Requires vertex_count <= kMaxTspVertices.
std::pair<double, EdgeMultiset> opt_tsp(const Instance& inst,
                                        const Realization& d);

/// Kind-dispatching exact optimum.
std::pair<double, EdgeMultiset> opt(const Instance& inst,
                                    const Realization& d);

/// Precomputed sweep over all box vertices. Only edges with lo < hi are
/// enumerated (fixed edges contribute identically everywhere), which covers
/// every distinct box vertex exactly once.
class BoxSweep {
 public:
  explicit BoxSweep(const Instance& inst);

  int free_edge_count() const { return static_cast<int>(free_edges_.size()); }
  std::uint64_t vertex_count() const { return 1ULL << free_edges_.size(); }

  /// The realization for a vertex id (bit i set = free edge i at its upper
  /// bound). Vertex 0 is the all-lower realization.
  Realization realization(std::uint64_t id) const;

  /// opt(d) at a vertex, computed lazily and cached.
  double opt_value(std::uint64_t id) const;
  const EdgeMultiset& opt_solution(std::uint64_t id) const;

  /// Forces evaluation of every vertex (useful before tight loops).
  void precompute() const;

  /// Cost of a fixed multiset at a vertex in O(free edges).
  double multiset_value(const EdgeMultiset& sol, std::uint64_t id) const;

  const Instance& instance() const { return inst_; }

 private:
  void ensure(std::uint64_t id) const;

  const Instance& inst_;
  std::vector<int> free_edges_;
  mutable std::vector<char> computed_;
  mutable std::vector<double> opt_;
  mutable std::vector<EdgeMultiset> opt_sol_;
};

/// Exact regret of a fixed solution with witnesses.
struct RegretReport {
  double regret_value = 0.0;
  Realization witness_realization;
  EdgeMultiset witness_adversary;
};

/// Exact max over the box of sol(d) - opt(d), by box-vertex enumeration
/// (valid because the difference is convex in d). Requires the free-edge
/// count within kMaxSweepFreeEdges.
RegretReport regret_of(const Instance& inst, const EdgeMultiset& sol);

/// Same value computed through a BoxSweep whose opt cache is shared between
/// calls (the fast path for repeated regret queries on one instance).
RegretReport regret_of(const BoxSweep& sweep, const EdgeMultiset& sol);

/// Cross-check path for Steiner instances only: enumerate all feasible
/// adversary trees and evaluate each at its adversarial realization.
RegretReport regret_by_adversary_enumeration(const Instance& inst,
                                             const EdgeMultiset& sol);

/// Enumerates every feasible integral solution, in lexicographic
/// multiplicity order, invoking the callback for each.
void for_each_feasible_solution(const Instance& inst,
                                const std::function<void(const EdgeMultiset&)>& f);

struct MrsReport {
  EdgeMultiset mrs;
  double mr = 0.0;
};

/// Exact minimum-regret solution by full enumeration (ties broken by
/// lexicographic multiplicity vector).
MrsReport min_regret_solution(const Instance& inst);

}  // namespace robust

#endif
