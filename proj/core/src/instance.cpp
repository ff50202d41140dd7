#include "robust/instance.hpp"

#include <algorithm>
#include <cmath>

#include "robust/graph.hpp"

namespace robust {

bool Instance::is_terminal(int v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

CostVector Instance::midpoint() const {
  CostVector w(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    w[e] = 0.5 * (edges[e].lo + edges[e].hi);
  return w;
}

Realization Instance::lower() const {
  Realization d(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) d[e] = edges[e].lo;
  return d;
}

Realization Instance::upper() const {
  Realization d(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) d[e] = edges[e].hi;
  return d;
}

void validate(const Instance& inst) {
  if (inst.vertex_count <= 0)
    throw ValidationError("instance has no vertices");
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const Edge& ed = inst.edges[e];
    if (ed.u < 0 || ed.u >= inst.vertex_count || ed.v < 0 ||
        ed.v >= inst.vertex_count)
      throw ValidationError("edge " + std::to_string(e + 1) +
                            ": endpoint out of range");
    if (ed.u == ed.v)
      throw ValidationError("edge " + std::to_string(e + 1) +
                            ": self-loop");
    if (!std::isfinite(ed.lo) || !std::isfinite(ed.hi))
      throw ValidationError("edge " + std::to_string(e + 1) +
                            ": non-finite bound");
    if (ed.lo < 0.0)
      throw ValidationError("edge " + std::to_string(e + 1) +
                            ": negative lower bound");
    if (ed.lo > ed.hi)
      throw ValidationError("edge " + std::to_string(e + 1) +
                            ": lower bound exceeds upper");
  }
  if (!graph_connected(inst.vertex_count, inst.edges))
    throw ValidationError("graph is not connected");
  for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
    int t = inst.terminals[i];
    if (t < 0 || t >= inst.vertex_count)
      throw ValidationError("terminal out of range");
    if (i > 0 && inst.terminals[i - 1] >= t)
      throw ValidationError("terminals not strictly sorted");
  }
  if (inst.kind == Kind::SteinerTree) {
    if (inst.terminals.empty())
      throw ValidationError("Steiner instance needs at least one terminal");
  } else {
    if (static_cast<int>(inst.terminals.size()) != inst.vertex_count)
      throw ValidationError("TSP instance must have every vertex terminal");
  }
}

namespace {

bool steiner_feasible(const Instance& inst, const EdgeMultiset& sol) {
  UnionFind uf(inst.vertex_count);
  int used = 0;
  std::vector<char> touched(inst.vertex_count, 0);
  for (std::size_t e = 0; e < sol.size(); ++e) {
    int m = sol[e];
    if (m < 0 || m > 1) return false;
    if (m == 0) continue;
    ++used;
    const Edge& ed = inst.edges[e];
    touched[ed.u] = touched[ed.v] = 1;
    if (!uf.unite(ed.u, ed.v)) return false;  // cycle
  }
  // All terminals in one component, and no chosen edge outside it.
  int root = uf.find(inst.terminals.front());
  for (int t : inst.terminals)
    if (uf.find(t) != root) return false;
  int comp_vertices = 0;
  for (int v = 0; v < inst.vertex_count; ++v)
    if (touched[v] && uf.find(v) == root) ++comp_vertices;
  if (used > 0 && used != comp_vertices - 1) return false;  // second component
  for (int v = 0; v < inst.vertex_count; ++v)
    if (touched[v] && uf.find(v) != root) return false;
  return true;
}

bool tsp_feasible(const Instance& inst, const EdgeMultiset& sol) {
  std::vector<int> degree(inst.vertex_count, 0);
  UnionFind uf(inst.vertex_count);
  for (std::size_t e = 0; e < sol.size(); ++e) {
    int m = sol[e];
    if (m < 0 || m > 2) return false;
    if (m == 0) continue;
    const Edge& ed = inst.edges[e];
    degree[ed.u] += m;
    degree[ed.v] += m;
    uf.unite(ed.u, ed.v);
  }
  if (inst.vertex_count == 1) return true;
  for (int v = 0; v < inst.vertex_count; ++v) {
    if (degree[v] == 0 || degree[v] % 2 != 0) return false;
    if (!uf.same(0, v)) return false;
  }
  return true;
}

}  // namespace

bool is_feasible(const Instance& inst, const EdgeMultiset& sol) {
  if (sol.size() != inst.edges.size()) return false;
  return inst.kind == Kind::SteinerTree ? steiner_feasible(inst, sol)
                                        : tsp_feasible(inst, sol);
}

void require_feasible(const Instance& inst, const EdgeMultiset& sol) {
  if (!is_feasible(inst, sol))
    throw ValidationError("solution is infeasible for the instance");
}

double solution_cost(const Instance& inst, const EdgeMultiset& sol,
                     const Realization& d) {
  require_feasible(inst, sol);
  double total = 0.0;
  for (std::size_t e = 0; e < sol.size(); ++e) total += sol[e] * d[e];
  return total;
}

double multiset_cost(const EdgeMultiset& sol, const CostVector& w) {
  double total = 0.0;
  for (std::size_t e = 0; e < sol.size(); ++e) total += sol[e] * w[e];
  return total;
}

Realization adversarial_realization(const Instance& inst,
                                    const EdgeMultiset& sol,
                                    const EdgeMultiset& adv) {
  require_feasible(inst, sol);
  require_feasible(inst, adv);
  Realization d(inst.edges.size());
  for (std::size_t e = 0; e < inst.edges.size(); ++e)
    d[e] = sol[e] > adv[e] ? inst.edges[e].hi : inst.edges[e].lo;
  return d;
}

std::pair<CostVector, CostVector> derived_weights(
    const Instance& inst, const std::vector<double>& x) {
  CostVector c(inst.edges.size()), cp(inst.edges.size());
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    double xe = x[e];
    if (xe < -kCostTol || xe > 1.0 + kCostTol)
      throw DomainError("derived_weights: x outside [0,1]");
    xe = std::clamp(xe, 0.0, 1.0);
    const Edge& ed = inst.edges[e];
    c[e] = ed.hi * xe - ed.lo * xe + ed.lo;
    cp[e] = ed.lo - ed.lo * xe;
  }
  return {c, cp};
}

}  // namespace robust
