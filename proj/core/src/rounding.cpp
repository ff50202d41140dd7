#include "robust/rounding.hpp"

#include <algorithm>
#include <numeric>

#include "robust/graph.hpp"
#include "robust/local_search.hpp"

namespace robust {

EdgeMultiset mst(int vertex_count, const std::vector<Edge>& edges,
                 const CostVector& weights) {
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] < weights[b];
    return a < b;
  });
  UnionFind uf(vertex_count);
  EdgeMultiset tree(edges.size());
  int picked = 0;
  for (int e : order)
    if (uf.unite(edges[e].u, edges[e].v)) {
      tree[e] = 1;
      ++picked;
    }
  if (picked != vertex_count - 1)
    throw ValidationError("mst: graph is disconnected");
  return tree;
}

EdgeMultiset double_tree_tsp(const Instance& inst, const CostVector& weights) {
  EdgeMultiset tree = mst(inst.vertex_count, inst.edges, weights);
  for (std::size_t e = 0; e < tree.size(); ++e) tree[e] *= 2;
  return tree;
}

EdgeMultiset steiner_2approx(const Instance& inst, const CostVector& weights) {
  int k = static_cast<int>(inst.terminals.size());
  EdgeMultiset result(inst.edge_count());
  if (k <= 1) return result;

  // Metric closure over terminals with deterministic shortest paths.
  std::vector<ShortestPaths> sp;
  sp.reserve(k);
  for (int t : inst.terminals)
    sp.push_back(dijkstra(inst.vertex_count, inst.edges, weights, t));

  std::vector<Edge> closure;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      closure.push_back({i, j, 0.0, 0.0});
  CostVector closure_w;
  closure_w.reserve(closure.size());
  for (const Edge& ce : closure)
    closure_w.push_back(sp[ce.u].dist[inst.terminals[ce.v]]);
  EdgeMultiset closure_tree = mst(k, closure, closure_w);

  std::vector<char> chosen(inst.edge_count(), 0);
  for (std::size_t ce = 0; ce < closure.size(); ++ce)
    if (closure_tree[ce]) {
      int i = closure[ce].u;
      int j = inst.terminals[closure[ce].v];
      for (int e : extract_path(sp[i], inst.terminals[i], j)) chosen[e] = 1;
    }

  // Reduce the expanded union to a tree and prune non-terminal leaves.
  std::vector<int> order;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (chosen[e]) order.push_back(e);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] < weights[b];
    return a < b;
  });
  UnionFind uf(inst.vertex_count);
  EdgeMultiset tree(inst.edge_count());
  for (int e : order)
    if (uf.unite(inst.edges[e].u, inst.edges[e].v)) tree[e] = 1;
  WorkingTree wt(inst, tree);
  wt.apply(SwapMove{});  // leaf pruning only
  return wt.edge_set();
}

CostVector rounding_weights(const Instance& inst, const std::vector<double>& x,
                            double delta) {
  CostVector w(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e) {
    double xe = x[e];
    double shrink = 1.0 - delta * xe;
    w[e] = std::max(inst.edges[e].hi * shrink, inst.edges[e].lo * shrink) +
           delta * inst.edges[e].lo * xe;
  }
  return w;
}

EdgeMultiset round_robust(const Instance& inst, const std::vector<double>& x,
                          const RoundingParams& params) {
  CostVector w = rounding_weights(inst, x, params.delta);
  return inst.kind == Kind::SteinerTree ? steiner_2approx(inst, w)
                                        : double_tree_tsp(inst, w);
}

}  // namespace robust
