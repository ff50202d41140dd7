#include "doctest.h"

#include "robust/exact.hpp"
#include "robust/generators.hpp"
#include "test_util.hpp"

using namespace robust;
using testutil::make_instance;

TEST_CASE("opt_steiner on the path graph") {
  Instance inst = make_instance(3, {{0, 1, 1, 1}, {1, 2, 1, 1}}, {0, 2},
                                Kind::SteinerTree);
  auto [cost, tree] = opt_steiner(inst, {1.0, 1.0});
  CHECK(cost == doctest::Approx(2.0));
  CHECK(tree[0] == 1);
  CHECK(tree[1] == 1);
}

TEST_CASE("opt_steiner prefers the direct edge on a triangle") {
  Instance inst = make_instance(
      3, {{0, 1, 1, 1}, {1, 2, 5, 5}, {0, 2, 5, 5}}, {0, 1},
      Kind::SteinerTree);
  auto [cost, tree] = opt_steiner(inst, {1.0, 5.0, 5.0});
  CHECK(cost == doctest::Approx(1.0));
  CHECK(tree[0] == 1);
  CHECK(tree[1] == 0);
  CHECK(tree[2] == 0);
}

TEST_CASE("opt_steiner matches exhaustive enumeration on random instances") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 7;
  spec.edge_count = 12;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    Realization d = inst.kind == Kind::SteinerTree && seed % 2
                        ? inst.lower()
                        : inst.upper();
    auto [cost, tree] = opt_steiner(inst, d);
    CHECK(is_feasible(inst, tree));
    CHECK(solution_cost(inst, tree, d) == doctest::Approx(cost));
    double brute = testutil::exhaustive_steiner_opt(inst, d);
    CHECK(cost == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("opt_tsp on a unit triangle") {
  Instance inst = make_instance(
      3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}}, {}, Kind::Tsp);
  auto [cost, walk] = opt_tsp(inst, {1.0, 1.0, 1.0});
  CHECK(cost == doctest::Approx(3.0));
  CHECK(is_feasible(inst, walk));
}

TEST_CASE("opt_tsp doubles the spokes of a star") {
  Instance inst = make_instance(
      4, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}}, {}, Kind::Tsp);
  auto [cost, walk] = opt_tsp(inst, {1.0, 1.0, 1.0});
  CHECK(cost == doctest::Approx(6.0));
  for (int e = 0; e < 3; ++e) CHECK(walk[e] == 2);
}

TEST_CASE("opt_tsp matches exhaustive enumeration on random instances") {
  RandomInstanceSpec spec;
  spec.kind = Kind::Tsp;
  spec.vertex_count = 6;
  spec.edge_count = 9;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    Realization d = seed % 2 ? inst.upper() : inst.lower();
    auto [cost, walk] = opt_tsp(inst, d);
    CHECK(is_feasible(inst, walk));
    CHECK(solution_cost(inst, walk, d) == doctest::Approx(cost));
    double brute = testutil::exhaustive_tsp_opt(inst, d);
    CHECK(cost == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("opt_tsp enforces its vertex cap") {
  RandomInstanceSpec spec;
  spec.kind = Kind::Tsp;
  spec.vertex_count = 13;
  spec.edge_count = 20;
  Instance inst = gen_random(spec);
  CHECK_THROWS_AS(opt_tsp(inst, inst.lower()), CapError);
}

TEST_CASE("regret is zero on a point box") {
  Instance inst = make_instance(
      4, {{0, 1, 2, 2}, {1, 2, 1, 1}, {2, 3, 3, 3}, {0, 3, 4, 4}}, {0, 3},
      Kind::SteinerTree);
  EdgeMultiset sol(4);
  sol[3] = 1;
  RegretReport rep = regret_of(inst, sol);
  CHECK(rep.regret_value == doctest::Approx(4.0 - 4.0));
  // Degenerate box: regret equals sol(d) - opt(d) at the single point.
  auto [opt_cost, opt_tree] = opt_steiner(inst, inst.lower());
  CHECK(rep.regret_value ==
        doctest::Approx(solution_cost(inst, sol, inst.lower()) - opt_cost));
}

TEST_CASE("failure-instance regrets at n=10") {
  Instance inst = gen_failure_instance(10, 0.1);
  EdgeMultiset cycle = failure_cycle_solution(inst);
  RegretReport cycle_rep = regret_of(inst, cycle);
  // Exact regret of the rim tour is 1 + 2*eps*(n-2): the adversary maxes the
  // nine rim edges the tour uses and zeroes the one it skips.
  CHECK(cycle_rep.regret_value == doctest::Approx(1.0 + 2 * 0.1 * 8));

  EdgeMultiset star = failure_doubled_star(inst);
  RegretReport star_rep = regret_of(inst, star);
  CHECK(star_rep.regret_value == doctest::Approx(16.2));
  // Witness sanity: regret reproduces from the stored witnesses.
  double sol_at = solution_cost(inst, star, star_rep.witness_realization);
  double adv_at =
      solution_cost(inst, star_rep.witness_adversary,
                    star_rep.witness_realization);
  auto [opt_at, opt_sol] = opt_tsp(inst, star_rep.witness_realization);
  CHECK(adv_at == doctest::Approx(opt_at));
  CHECK(sol_at - opt_at == doctest::Approx(star_rep.regret_value));
}

TEST_CASE("regret paths (a) and (b) agree on Steiner instances") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 5;
  spec.edge_count = 8;
  int done = 0;
  for (std::uint64_t seed = 1; done < 25 && seed < 200; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    EdgeMultiset sol(inst.edge_count());
    testutil::Dsu dsu(inst.vertex_count);
    for (int e = 0; e < inst.edge_count(); ++e)
      if (dsu.unite(inst.edges[e].u, inst.edges[e].v)) sol[e] = 1;
    if (!is_feasible(inst, sol)) continue;
    ++done;
    RegretReport by_vertices = regret_of(inst, sol);
    RegretReport by_adversaries = regret_by_adversary_enumeration(inst, sol);
    CHECK(by_vertices.regret_value ==
          doctest::Approx(by_adversaries.regret_value).epsilon(1e-7));
  }
  CHECK(done == 25);
}

TEST_CASE("opt is concave over the box") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 6;
  spec.edge_count = 9;
  SplitMix64 rng(7);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Realization d1(inst.edge_count()), d2(inst.edge_count());
      for (int e = 0; e < inst.edge_count(); ++e) {
        const Edge& ed = inst.edges[e];
        d1[e] = ed.lo + (ed.hi - ed.lo) * rng.next_double();
        d2[e] = ed.lo + (ed.hi - ed.lo) * rng.next_double();
      }
      double lambda = rng.next_double();
      Realization mix(inst.edge_count());
      for (int e = 0; e < inst.edge_count(); ++e)
        mix[e] = lambda * d1[e] + (1.0 - lambda) * d2[e];
      double o1 = opt_steiner(inst, d1).first;
      double o2 = opt_steiner(inst, d2).first;
      double om = opt_steiner(inst, mix).first;
      CHECK(om >= lambda * o1 + (1.0 - lambda) * o2 - 1e-7);
    }
  }
}

TEST_CASE("every feasible solution dominates opt pointwise") {
  RandomInstanceSpec spec;
  spec.kind = Kind::Tsp;
  spec.vertex_count = 5;
  spec.edge_count = 7;
  spec.seed = 3;
  Instance inst = gen_random(spec);
  BoxSweep sweep(inst);
  for_each_feasible_solution(inst, [&](const EdgeMultiset& sol) {
    double at_lower = 0.0;
    for (int e = 0; e < inst.edge_count(); ++e)
      at_lower += sol[e] * inst.edges[e].lo;
    CHECK(at_lower >= sweep.opt_value(0) - 1e-9);
  });
}

TEST_CASE("min_regret_solution basics") {
  Instance single = make_instance(2, {{0, 1, 1, 4}}, {0, 1},
                                  Kind::SteinerTree);
  MrsReport rep = min_regret_solution(single);
  CHECK(rep.mr == doctest::Approx(0.0));
  CHECK(rep.mrs[0] == 1);

  // No uncertainty: any optimal solution has zero regret.
  Instance point = make_instance(
      4, {{0, 1, 2, 2}, {1, 2, 1, 1}, {2, 3, 2, 2}, {0, 3, 6, 6}}, {},
      Kind::Tsp);
  MrsReport tsp_rep = min_regret_solution(point);
  CHECK(tsp_rep.mr == doctest::Approx(0.0));
}

TEST_CASE("min_regret_solution on the n=6 failure instance") {
  Instance inst = gen_failure_instance(6, 0.1);
  MrsReport rep = min_regret_solution(inst);
  // Exact MR at n=6, eps=0.1 is 1 + 2*eps*(n-2) = 1.8, achieved by the rim
  // tour; the rim tour's regret upper-bounds it.
  CHECK(rep.mr == doctest::Approx(1.0 + 2 * 0.1 * 4));
  CHECK(rep.mr <=
        regret_of(inst, failure_cycle_solution(inst)).regret_value + 1e-9);
  // Cross-check the winner's regret against the slow oracle.
  CHECK(rep.mr ==
        doctest::Approx(testutil::exhaustive_regret(inst, rep.mrs.mult))
            .epsilon(1e-9));
}

TEST_CASE("mr is zero whenever the box is a point") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 5;
  spec.edge_count = 7;
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    for (Edge& e : inst.edges) e.hi = e.lo;  // collapse the box
    MrsReport rep = min_regret_solution(inst);
    CHECK(rep.mr == doctest::Approx(0.0).epsilon(1e-12));
  }
}
