#include "robust/graph.hpp"

#include <limits>
#include <queue>

namespace robust {

Adjacency::Adjacency(int vertex_count, const std::vector<Edge>& edges)
    : out(vertex_count) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[edges[e].u].push_back({edges[e].v, static_cast<int>(e)});
    out[edges[e].v].push_back({edges[e].u, static_cast<int>(e)});
  }
}

ShortestPaths dijkstra(int vertex_count, const std::vector<Edge>& edges,
                       const CostVector& weights, int source,
                       const std::vector<char>& blocked) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  ShortestPaths sp;
  sp.dist.assign(vertex_count, kInf);
  sp.pred_edge.assign(vertex_count, -1);
  sp.pred_vertex.assign(vertex_count, -1);
  Adjacency adj(vertex_count, edges);

  // (dist, vertex); lazy deletion. Tie-break on vertex index keeps the
  // settle order deterministic; a settled vertex keeps the lowest-edge-index
  // predecessor among equal-length paths because relaxations use strict <
  // and arcs are scanned in edge order.
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  sp.dist[source] = 0.0;
  pq.push({0.0, source});
  std::vector<char> done(vertex_count, 0);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& arc : adj.out[u]) {
      if (!blocked.empty() && blocked[arc.to]) continue;
      double nd = du + weights[arc.edge];
      if (nd < sp.dist[arc.to]) {
        sp.dist[arc.to] = nd;
        sp.pred_edge[arc.to] = arc.edge;
        sp.pred_vertex[arc.to] = u;
        pq.push({nd, arc.to});
      } else if (!done[arc.to] && nd == sp.dist[arc.to] &&
                 sp.pred_edge[arc.to] >= 0 &&
                 arc.edge < sp.pred_edge[arc.to]) {
        // Lowest-edge-index tie-break among exactly equal path lengths.
        // Restricted to unsettled vertices so predecessor chains always
        // point at settled vertices and stay acyclic.
        sp.pred_edge[arc.to] = arc.edge;
        sp.pred_vertex[arc.to] = u;
      }
    }
  }
  return sp;
}

std::vector<int> extract_path(const ShortestPaths& sp, int s, int t) {
  std::vector<int> path;
  int v = t;
  while (v != s) {
    if (sp.pred_edge[v] < 0) return {};  // unreachable
    path.push_back(sp.pred_edge[v]);
    v = sp.pred_vertex[v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool graph_connected(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 1) return true;
  UnionFind uf(vertex_count);
  int components = vertex_count;
  for (const Edge& e : edges)
    if (uf.unite(e.u, e.v)) --components;
  return components == 1;
}

}  // namespace robust
