#include "robust/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "robust/graph.hpp"

namespace robust {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WorkingTree::WorkingTree(const Instance& inst, const EdgeMultiset& start)
    : inst_(inst), edges_(start) {
  rebuild_membership();
}

void WorkingTree::rebuild_membership() {
  in_tree_.assign(inst_.vertex_count, 0);
  degree_.assign(inst_.vertex_count, 0);
  vertex_list_.clear();
  for (int e = 0; e < inst_.edge_count(); ++e) {
    if (!edges_[e]) continue;
    ++degree_[inst_.edges[e].u];
    ++degree_[inst_.edges[e].v];
    in_tree_[inst_.edges[e].u] = 1;
    in_tree_[inst_.edges[e].v] = 1;
  }
  for (int t : inst_.terminals) in_tree_[t] = 1;
  for (int v = 0; v < inst_.vertex_count; ++v)
    if (in_tree_[v]) vertex_list_.push_back(v);
}

double WorkingTree::cost(const CostVector& w) const {
  return multiset_cost(edges_, w);
}

void WorkingTree::apply(const SwapMove& move) {
  for (int e : move.removed_subpath) edges_[e] = 0;
  for (int e : move.added_path) edges_[e] = 1;
  // Prune non-terminal leaves.
  std::vector<int> degree(inst_.vertex_count, 0);
  for (int e = 0; e < inst_.edge_count(); ++e)
    if (edges_[e]) {
      ++degree[inst_.edges[e].u];
      ++degree[inst_.edges[e].v];
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < inst_.edge_count(); ++e) {
      if (!edges_[e]) continue;
      int u = inst_.edges[e].u;
      int v = inst_.edges[e].v;
      int leaf = -1;
      if (degree[u] == 1 && !inst_.is_terminal(u)) leaf = u;
      else if (degree[v] == 1 && !inst_.is_terminal(v)) leaf = v;
      if (leaf >= 0) {
        edges_[e] = 0;
        --degree[u];
        --degree[v];
        changed = true;
      }
    }
  }
  rebuild_membership();
}

std::vector<int> WorkingTree::tree_path(int s, int t) const {
  // DFS over tree edges.
  std::vector<int> pred_edge(inst_.vertex_count, -1);
  std::vector<int> pred_vertex(inst_.vertex_count, -1);
  std::vector<char> seen(inst_.vertex_count, 0);
  Adjacency adj(inst_.vertex_count, inst_.edges);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == t) break;
    for (const auto& arc : adj.out[u]) {
      if (!edges_[arc.edge] || seen[arc.to]) continue;
      seen[arc.to] = 1;
      pred_edge[arc.to] = arc.edge;
      pred_vertex[arc.to] = u;
      stack.push_back(arc.to);
    }
  }
  std::vector<int> path;
  int v = t;
  while (v != s) {
    if (pred_edge[v] < 0) return {};
    path.push_back(pred_edge[v]);
    v = pred_vertex[v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

/// Maximal removable subpaths of the tree path between the endpoints of an
/// added outside path. Splits at internal vertices of degree >= 3 and at
/// internal terminals; each candidate is verified to keep feasibility.
std::vector<std::vector<int>> removable_segments(const Instance& inst,
                                                 const WorkingTree& tree,
                                                 int s, int t,
                                                 const std::vector<int>& added) {
  std::vector<std::vector<int>> result;
  std::vector<int> path = tree.tree_path(s, t);
  if (path.empty()) return result;

  // Vertex sequence along the path.
  std::vector<int> verts{s};
  int at = s;
  for (int e : path) {
    at = inst.edges[e].u == at ? inst.edges[e].v : inst.edges[e].u;
    verts.push_back(at);
  }

  std::vector<std::vector<int>> segments;
  std::vector<int> current;
  for (std::size_t i = 0; i < path.size(); ++i) {
    current.push_back(path[i]);
    int end_vertex = verts[i + 1];
    bool is_split = i + 1 == path.size() ||  // reached t
                    tree.degree(end_vertex) >= 3 ||
                    inst.is_terminal(end_vertex);
    if (is_split) {
      segments.push_back(current);
      current.clear();
    }
  }

  EdgeMultiset scratch = tree.edge_set();
  for (int e : added) scratch[e] = 1;
  for (const auto& seg : segments) {
    for (int e : seg) scratch[e] = 0;
    if (is_feasible(inst, scratch)) result.push_back(seg);
    for (int e : seg) scratch[e] = 1;
  }
  return result;
}

struct OutsidePath {
  std::vector<int> edges;
  double cost = kInf;
};

/// Shortest path between two tree vertices whose internal vertices and edges
/// avoid the tree.
OutsidePath shortest_outside_path(const Instance& inst,
                                  const CostVector& weights,
                                  const WorkingTree& tree, int s, int t) {
  CostVector w = weights;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (tree.has_edge(e)) w[e] = kInf;
  std::vector<char> blocked(inst.vertex_count, 0);
  for (int v : tree.vertices()) blocked[v] = 1;
  blocked[t] = 0;
  ShortestPaths sp = dijkstra(inst.vertex_count, inst.edges, w, s, blocked);
  OutsidePath out;
  if (sp.dist[t] == kInf) return out;
  out.cost = sp.dist[t];
  out.edges = extract_path(sp, s, t);
  return out;
}

}  // namespace

std::vector<SwapMove> enumerate_swaps(const Instance& inst,
                                      const CostVector& weights,
                                      const WorkingTree& tree) {
  std::vector<SwapMove> moves;
  const std::vector<int>& verts = tree.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int s = verts[i];
      int t = verts[j];
      OutsidePath f = shortest_outside_path(inst, weights, tree, s, t);
      if (f.edges.empty()) continue;
      for (auto& seg : removable_segments(inst, tree, s, t, f.edges)) {
        SwapMove move;
        move.added_path = f.edges;
        move.added_cost = f.cost;
        move.removed_subpath = std::move(seg);
        move.removed_cost = 0.0;
        for (int e : move.removed_subpath) move.removed_cost += weights[e];
        move.gain = move.removed_cost - move.added_cost;
        moves.push_back(std::move(move));
      }
    }
  }
  return moves;
}

EdgeMultiset initial_solution(const Instance& inst, const CostVector& weights) {
  std::vector<char> chosen(inst.edge_count(), 0);
  for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
    ShortestPaths sp =
        dijkstra(inst.vertex_count, inst.edges, weights, inst.terminals[i]);
    for (std::size_t j = i + 1; j < inst.terminals.size(); ++j)
      for (int e : extract_path(sp, inst.terminals[i], inst.terminals[j]))
        chosen[e] = 1;
  }
  // Reduce the union to a tree (cheapest edges first) and prune.
  std::vector<int> order;
  for (int e = 0; e < inst.edge_count(); ++e)
    if (chosen[e]) order.push_back(e);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  UnionFind uf(inst.vertex_count);
  EdgeMultiset tree(inst.edge_count());
  for (int e : order)
    if (uf.unite(inst.edges[e].u, inst.edges[e].v)) tree[e] = 1;
  WorkingTree wt(inst, tree);
  wt.apply(SwapMove{});  // no-op swap triggers leaf pruning
  return wt.edge_set();
}

EdgeMultiset local_search(const Instance& inst, const CostVector& weights,
                          const EdgeMultiset& start, double eps,
                          LocalSearchStats* stats) {
  if (eps <= 0.0) throw DomainError("local_search: eps must be positive");
  require_feasible(inst, start);
  WorkingTree tree(inst, start);
  tree.apply(SwapMove{});  // prune redundant leaves of the start tree

  // Termination guard from the strict-decrease rule: every accepted swap
  // reduces the cost by at least (eps/4) * (min positive weight).
  double max_w = 0.0;
  double min_pos_w = kInf;
  for (double w : weights) {
    max_w = std::max(max_w, w);
    if (w > 0.0) min_pos_w = std::min(min_pos_w, w);
  }
  long long cap = 1;
  if (max_w > 0.0 && min_pos_w < kInf) {
    double n = inst.vertex_count;
    double bound = std::log(n * max_w / min_pos_w) /
                   -std::log1p(-eps / (4.0 * n * n));
    double slack = 4.0 * n * max_w / (eps * min_pos_w);
    cap = static_cast<long long>(std::ceil(std::max(1.0, bound + slack))) + 4;
  }

  long long swaps = 0;
  while (true) {
    std::vector<SwapMove> moves = enumerate_swaps(inst, weights, tree);
    if (stats) stats->candidates += static_cast<long long>(moves.size());
    const SwapMove* best = nullptr;
    for (const SwapMove& m : moves) {
      if (m.removed_cost <= 0.0) continue;
      if (m.gain < (eps / 4.0) * m.removed_cost) continue;
      if (!best || m.gain > best->gain) best = &m;
    }
    if (!best) break;
    tree.apply(*best);
    ++swaps;
    if (stats) stats->swaps = static_cast<int>(swaps);
    if (swaps > cap)
      throw Error("local_search: swap count exceeded the termination bound");
  }
  return tree.edge_set();
}

}  // namespace robust
