#ifndef ROBUST_GRAPH_HPP
#define ROBUST_GRAPH_HPP

#include <vector>

#include "robust/instance.hpp"

namespace robust {

/// Union-find with path halving; used by feasibility checks, Kruskal and
/// connectivity probes.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false if x and y were already joined.
  bool unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    return true;
  }
  bool same(int x, int y) { return find(x) == find(y); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

/// Adjacency structure over an instance's edges (parallel edges kept
/// distinct by index).
struct Adjacency {
  struct Arc {
    int to;
    int edge;
  };
  std::vector<std::vector<Arc>> out;

  Adjacency(int vertex_count, const std::vector<Edge>& edges);
};

/// Single-source shortest paths with deterministic tie-breaking: among equal
/// path lengths the predecessor with the lowest edge index wins. `weights`
/// must be nonnegative. Vertices in `blocked` (if nonempty) are not entered
/// (the source is always entered). Returns distances and predecessor edge per
/// vertex (-1 when unreached or source).
struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> pred_edge;    // edge used to reach the vertex
  std::vector<int> pred_vertex;  // other endpoint of pred_edge
};
ShortestPaths dijkstra(int vertex_count, const std::vector<Edge>& edges,
                       const CostVector& weights, int source,
                       const std::vector<char>& blocked = {});

/// Edge indices of the s->t path found by `dijkstra`, ordered from s to t.
std::vector<int> extract_path(const ShortestPaths& sp, int s, int t);

/// True if the whole vertex set is connected by the edge list.
bool graph_connected(int vertex_count, const std::vector<Edge>& edges);

}  // namespace robust

#endif
