#include "doctest.h"

#include <set>

#include "robust/exact.hpp"
#include "robust/generators.hpp"
#include "robust/local_search.hpp"
#include "test_util.hpp"

using namespace robust;
using testutil::make_instance;

namespace {

EdgeMultiset greedy_tree(const Instance& inst) {
  EdgeMultiset sol(inst.edge_count());
  testutil::Dsu dsu(inst.vertex_count);
  for (int e = 0; e < inst.edge_count(); ++e)
    if (dsu.unite(inst.edges[e].u, inst.edges[e].v)) sol[e] = 1;
  return sol;
}

/// Exhaustive feasible-swap oracle: every (contiguous tree subpath a of the
/// cycle, shortest outside path f) pair whose exchange stays feasible, with
/// a maximal (not extendable while staying removable).
int count_maximal_feasible_swaps(const Instance& inst,
                                 const CostVector& w,
                                 const EdgeMultiset& tree) {
  WorkingTree wt(inst, tree);
  int count = 0;
  const auto& verts = wt.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int s = verts[i], t = verts[j];
      // Shortest outside path by brute force over simple paths.
      std::vector<int> best;
      double best_cost = testutil::kInf;
      testutil::for_all_simple_paths(
          inst.vertex_count, inst.edges, s, t, [&](const std::vector<int>& p) {
            int at = s;
            for (int e : p) {
              if (tree[e]) return;
              at = inst.edges[e].u == at ? inst.edges[e].v : inst.edges[e].u;
              if (at != t && wt.has_vertex(at)) return;
            }
            double c = 0.0;
            for (int e : p) c += w[e];
            if (c < best_cost) {
              best_cost = c;
              best = p;
            }
          });
      if (best.empty()) continue;
      std::vector<int> path = wt.tree_path(s, t);
      int L = static_cast<int>(path.size());
      auto removable = [&](int lo, int hi) {  // path[lo..hi] inclusive
        EdgeMultiset next = tree;
        for (int e : best) next[e] = 1;
        for (int k = lo; k <= hi; ++k) next[path[k]] = 0;
        return is_feasible(inst, next);
      };
      for (int lo = 0; lo < L; ++lo)
        for (int hi = lo; hi < L; ++hi) {
          if (!removable(lo, hi)) continue;
          bool extendable = (lo > 0 && removable(lo - 1, hi)) ||
                            (hi + 1 < L && removable(lo, hi + 1));
          if (!extendable) ++count;
        }
    }
  return count;
}

}  // namespace

TEST_CASE("swaps collapse to single-edge exchanges on parallel edges") {
  // Tree spans both vertices; every non-tree edge is parallel to it.
  Instance inst = make_instance(
      2, {{0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 3, 3}}, {0, 1},
      Kind::SteinerTree);
  CostVector w{3.0, 2.0, 1.0};
  EdgeMultiset tree(3);
  tree[0] = 1;
  auto moves = enumerate_swaps(inst, w, WorkingTree(inst, tree));
  REQUIRE(moves.size() == 1);  // the cheapest parallel edge
  CHECK(moves[0].added_path == std::vector<int>{2});
  CHECK(moves[0].removed_subpath == std::vector<int>{0});
  CHECK(moves[0].gain == doctest::Approx(2.0));
}

TEST_CASE("4-cycle swaps: the missing edge against each single tree edge") {
  Instance inst = make_instance(
      4, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {3, 0, 1, 1}},
      {0, 1, 2, 3}, Kind::SteinerTree);
  CostVector w{1.0, 1.0, 1.0, 1.0};
  EdgeMultiset tree(4);
  tree[0] = tree[1] = tree[2] = 1;
  auto moves = enumerate_swaps(inst, w, WorkingTree(inst, tree));
  // Hand/oracle enumeration: every internal path vertex is a terminal, so
  // the removable subpaths are exactly the three single edges.
  CHECK(count_maximal_feasible_swaps(inst, w, tree) == 3);
  REQUIRE(moves.size() == 3);
  std::set<int> removed;
  for (const auto& m : moves) {
    CHECK(m.added_path == std::vector<int>{3});
    REQUIRE(m.removed_subpath.size() == 1);
    removed.insert(m.removed_subpath[0]);
  }
  CHECK(removed == std::set<int>{0, 1, 2});
}

TEST_CASE("no swaps when nothing can be added") {
  Instance inst = make_instance(3, {{0, 1, 1, 1}, {1, 2, 1, 1}}, {0, 2},
                                Kind::SteinerTree);
  CostVector w{1.0, 1.0};
  EdgeMultiset tree(2);
  tree[0] = tree[1] = 1;
  auto moves = enumerate_swaps(inst, w, WorkingTree(inst, tree));
  CHECK(moves.empty());
}

TEST_CASE("enumerate_swaps agrees with the exhaustive oracle on randoms") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 6;
  spec.edge_count = 9;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    CostVector w = inst.midpoint();
    EdgeMultiset tree = local_search(inst, w, greedy_tree(inst), 4.0);
    // On a coarse tree the candidate sets must match the oracle's count.
    WorkingTree wt(inst, tree);
    auto moves = enumerate_swaps(inst, w, wt);
    CHECK(static_cast<int>(moves.size()) ==
          count_maximal_feasible_swaps(inst, w, wt.edge_set()));
  }
}

TEST_CASE("initial_solution: two terminals get the shortest path") {
  Instance inst = make_instance(
      4, {{0, 1, 2, 2}, {1, 3, 2, 2}, {0, 2, 1, 1}, {2, 3, 1, 1}}, {0, 3},
      Kind::SteinerTree);
  CostVector w{2.0, 2.0, 1.0, 1.0};
  EdgeMultiset tree = initial_solution(inst, w);
  CHECK(tree[2] == 1);
  CHECK(tree[3] == 1);
  CHECK(tree[0] == 0);
  CHECK(tree[1] == 0);
}

TEST_CASE("initial_solution: zero-weight star center absorbs the paths") {
  Instance inst = make_instance(
      4,
      {{3, 0, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}, {0, 1, 5, 5}, {1, 2, 5, 5}},
      {0, 1, 2}, Kind::SteinerTree);
  CostVector w{0.0, 0.0, 0.0, 5.0, 5.0};
  EdgeMultiset tree = initial_solution(inst, w);
  CHECK(tree[0] == 1);
  CHECK(tree[1] == 1);
  CHECK(tree[2] == 1);
  CHECK(tree[3] == 0);
  CHECK(tree[4] == 0);
}

TEST_CASE("initial_solution cost is within n^2 of optimal") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 7;
  spec.edge_count = 11;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    CostVector w = inst.midpoint();
    EdgeMultiset tree = initial_solution(inst, w);
    CHECK(is_feasible(inst, tree));
    double opt = opt_steiner(inst, Realization(w)).first;
    double n2 = static_cast<double>(inst.vertex_count) * inst.vertex_count;
    CHECK(multiset_cost(tree, w) >= opt - 1e-9);
    CHECK(multiset_cost(tree, w) <= n2 * opt + 1e-9);
  }
}

TEST_CASE("local_search leaves a globally optimal start unchanged") {
  Instance inst = make_instance(
      4, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {0, 3, 9, 9}}, {0, 3},
      Kind::SteinerTree);
  CostVector w{1.0, 1.0, 1.0, 9.0};
  EdgeMultiset opt_tree(4);
  opt_tree[0] = opt_tree[1] = opt_tree[2] = 1;
  EdgeMultiset out = local_search(inst, w, opt_tree, 0.05);
  CHECK(out == opt_tree);
}

TEST_CASE("local_search approximation and difference bounds vs exact opt") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 8;
  spec.edge_count = 13;
  const double eps = 0.05;
  LocalSearchStats stats;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    spec.seed = seed + 1000;
    Instance inst = gen_random(spec);
    CostVector w = inst.midpoint();
    EdgeMultiset alg =
        local_search(inst, w, initial_solution(inst, w), eps, &stats);
    CHECK(is_feasible(inst, alg));
    auto [opt_cost, opt_tree] = opt_steiner(inst, Realization(w));
    double alg_cost = multiset_cost(alg, w);
    CHECK(alg_cost <= 4.0 * (1.0 + eps) * opt_cost + 1e-7);
    double in_alg_only = 0.0, in_opt_only = 0.0;
    for (int e = 0; e < inst.edge_count(); ++e) {
      if (alg[e] && !opt_tree[e]) in_alg_only += w[e];
      if (opt_tree[e] && !alg[e]) in_opt_only += w[e];
    }
    CHECK(in_alg_only <= (4.0 + eps) * in_opt_only + 1e-7);
  }
}

TEST_CASE("accepted swaps strictly decrease the cost") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 7;
  spec.edge_count = 11;
  const double eps = 0.1;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    CostVector w = inst.midpoint();
    // Replay the search manually to watch the invariant.
    WorkingTree tree(inst, greedy_tree(inst));
    double cost = tree.cost(w);
    for (int step = 0; step < 200; ++step) {
      auto moves = enumerate_swaps(inst, w, tree);
      const SwapMove* best = nullptr;
      for (const auto& m : moves) {
        if (m.removed_cost <= 0.0 || m.gain < eps / 4.0 * m.removed_cost)
          continue;
        if (!best || m.gain > best->gain) best = &m;
      }
      if (!best) break;
      double required_drop = eps / 4.0 * best->removed_cost;
      tree.apply(*best);
      CHECK(is_feasible(inst, tree.edge_set()));
      double next_cost = tree.cost(w);
      CHECK(next_cost <= cost - required_drop + 1e-12);
      cost = next_cost;
    }
  }
}

TEST_CASE("random trees have a strict majority of degree <= 2 vertices") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(10));
    std::vector<Edge> edges = random_tree(n, rng);
    REQUIRE(static_cast<int>(edges.size()) == n - 1);
    std::vector<int> degree(n, 0);
    testutil::Dsu dsu(n);
    bool acyclic = true;
    for (const Edge& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
      acyclic = acyclic && dsu.unite(e.u, e.v);
    }
    CHECK(acyclic);
    int low = 0;
    for (int v = 0; v < n; ++v)
      if (degree[v] <= 2) ++low;
    CHECK(2 * low > n);
  }
}
