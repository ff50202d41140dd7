#ifndef ROBUST_INSTANCE_HPP
#define ROBUST_INSTANCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "robust/errors.hpp"

namespace robust {

/// Absolute tolerance for cost comparisons throughout the library.
inline constexpr double kCostTol = 1e-9;

enum class Kind { SteinerTree, Tsp };

/// Undirected edge with an interval [lo, hi] of possible lengths.
/// Endpoints are 0-indexed internally (1-indexed in the file format).
struct Edge {
  int u = 0;
  int v = 0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Per-edge nonnegative weights (derived weights, rounding weights, ...).
using CostVector = std::vector<double>;

/// One concrete length vector inside the box, indexed by edge.
using Realization = std::vector<double>;

/// An integral solution: per-edge multiplicities. Steiner trees use
/// multiplicities in {0,1}; TSP closed walks use {0,1,2}.
struct EdgeMultiset {
  std::vector<int> mult;

  EdgeMultiset() = default;
  explicit EdgeMultiset(std::size_t edge_count) : mult(edge_count, 0) {}

  int operator[](std::size_t e) const { return mult[e]; }
  int& operator[](std::size_t e) { return mult[e]; }
  std::size_t size() const { return mult.size(); }

  bool operator==(const EdgeMultiset& o) const { return mult == o.mult; }
  /// Lexicographic order on the multiplicity vector (edge 0 most significant);
  /// used as the deterministic tie-break for enumeration results.
  bool lex_less(const EdgeMultiset& o) const { return mult < o.mult; }
};

/// A robust problem instance: graph, per-edge length intervals, terminals.
struct Instance {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<int> terminals;  // sorted, unique, 0-indexed
  Kind kind = Kind::SteinerTree;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_terminal(int v) const;

  /// Midpoint lengths (lo+hi)/2 per edge.
  CostVector midpoint() const;
  /// The lower-bound realization.
  Realization lower() const;
  /// The upper-bound realization.
  Realization upper() const;
};

/// Checks every structural invariant (bounds ordered and finite, no
/// self-loops, connected graph, terminal set consistent with the kind).
/// Throws ValidationError on the first violation.
void validate(const Instance& inst);

/// Feasibility of an integral solution for the instance's kind:
///  - SteinerTree: multiplicities in {0,1}; chosen edges form one tree whose
///    component contains every terminal (a single terminal with no edges is
///    the trivial tree).
///  - Tsp: multiplicities in {0,1,2}; the multigraph is connected, touches
///    every vertex, and all degrees are even (a closed walk exists).
bool is_feasible(const Instance& inst, const EdgeMultiset& sol);

/// Throwing variant of is_feasible.
void require_feasible(const Instance& inst, const EdgeMultiset& sol);

/// Sum of mult_e * d_e. Rejects infeasible solutions.
double solution_cost(const Instance& inst, const EdgeMultiset& sol,
                     const Realization& d);

/// Plain weighted cost of a multiset under an arbitrary weight vector
/// (no feasibility check; used by solvers on derived weights).
double multiset_cost(const EdgeMultiset& sol, const CostVector& w);

/// The box vertex maximizing solution_cost(sol, d) - solution_cost(adv, d):
/// d_e = hi where sol uses e strictly more than adv, else lo.
Realization adversarial_realization(const Instance& inst,
                                    const EdgeMultiset& sol,
                                    const EdgeMultiset& adv);

/// Derived weights of a fractional point x in [0,1]^E:
///   c_e  = u_e x_e - l_e x_e + l_e
///   c'_e = l_e - l_e x_e
/// Both are nonnegative for x in the box. Throws DomainError if some x_e
/// falls outside [0,1] by more than kCostTol.
std::pair<CostVector, CostVector> derived_weights(const Instance& inst,
                                                  const std::vector<double>& x);

}  // namespace robust

#endif
