#include "doctest.h"

#include <cmath>
#include <map>

#include "robust/double_approx.hpp"
#include "robust/exact.hpp"
#include "robust/generators.hpp"
#include "robust/graph.hpp"
#include "robust/local_search.hpp"
#include "test_util.hpp"

using namespace robust;
using testutil::make_instance;

TEST_CASE("derive_constants reproduces the alpha-optimal bundle") {
  RobustParams p = paper_optimal_params();
  CHECK(p.alpha == doctest::Approx(993.4).epsilon(0.001));
  CHECK(p.beta == doctest::Approx(4 * 9.284));
  CHECK(2.0 * p.alpha * std::log(4.0) ==
        doctest::Approx(2755.0).epsilon(0.02));
  // The beta-side composition evaluates near 104, which we report as-is.
  double beta_side = 2.0 * p.beta * std::log(4.0) + std::log(4.0);
  CHECK(beta_side == doctest::Approx(104.35).epsilon(0.01));
}

TEST_CASE("derive_constants domain checks") {
  CHECK_THROWS_AS(derive_constants(1.0, 5.0, 2.0, 0.01), DomainError);
  CHECK_THROWS_AS(derive_constants(9.0, 1.0, 2.0, 0.01), DomainError);
  CHECK_THROWS_AS(derive_constants(9.0, 5.0, 0.0, 0.01), DomainError);
  CHECK_THROWS_AS(derive_constants(9.0, 5.0, 2.0, 4.0 / 35.0), DomainError);
}

TEST_CASE("zeta' at eps = 0 reduces to the closed form") {
  RobustParams p = derive_constants(9.284, 5.621, 2.241, 0.0);
  double sgp = std::sqrt(5.621);
  double expected = 4.0 * 5.621 /
                    ((sgp - 1.0) * (sgp - 1.0) * (4.0 * 5.621 - 1.0) *
                     (4.0 * 9.284 - 1.0));
  CHECK(p.zeta_prime == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("maincond evaluations") {
  // The alpha-optimal bundle narrowly fails the net-decrease condition: the
  // second min branch evaluates to ~0.2457 against an exponential term of
  // ~0.4876 (the first branch sits exactly on the boundary at eps = 0).
  RobustParams paper = paper_optimal_params();
  CHECK(maincond_value(paper) == doctest::Approx(-0.2419).epsilon(1e-3));
  CHECK_FALSE(maincond_holds(paper));

  // Small parameters fail, and outside the eps < sqrt(Gamma')-1 domain the
  // verdict is false rather than an evaluation of a meaningless zeta'.
  CHECK_FALSE(maincond_holds(derive_constants(1.01, 1.01, 0.01, 0.1)));

  // For fixed (Gamma', kappa, eps), large Gamma eventually satisfies it.
  bool seen_false = false;
  bool holds_from_then_on = true;
  bool reached = false;
  for (double gamma = 2.0; gamma <= 64.0; gamma *= 2.0) {
    bool ok = maincond_holds(derive_constants(gamma, 5.621, 2.241, 0.001));
    if (!ok && !reached) seen_false = true;
    if (ok) reached = true;
    if (reached && !ok) holds_from_then_on = false;
  }
  CHECK(seen_false);
  CHECK(reached);
  CHECK(holds_from_then_on);

  RobustParams fast = fast_params();
  CHECK(maincond_holds(fast));
  CHECK(maincond_value(fast) == doctest::Approx(0.2094).epsilon(1e-3));
  CHECK(fast.eta == doctest::Approx(0.1638).epsilon(1e-3));
}

TEST_CASE("constrained path: budget forces the expensive route") {
  std::vector<Edge> edges{{0, 1, 0, 0}, {0, 1, 0, 0}};
  CostVector w{10.0, 1.0};
  CostVector wp{0.0, 5.0};
  auto tight = constrained_shortest_path(2, edges, w, wp, 0, 1, 1.0, 0.0);
  REQUIRE(tight.has_value());
  CHECK(tight->edges == std::vector<int>{0});
  CHECK(tight->w_cost == doctest::Approx(10.0));

  auto loose = constrained_shortest_path(2, edges, w, wp, 0, 1, 5.0, 0.0);
  REQUIRE(loose.has_value());
  CHECK(loose->edges == std::vector<int>{1});
  CHECK(loose->w_cost == doctest::Approx(1.0));

  // Same behaviour with grid rounding enabled.
  auto tight_eps = constrained_shortest_path(2, edges, w, wp, 0, 1, 1.0, 0.3);
  REQUIRE(tight_eps.has_value());
  CHECK(tight_eps->w_cost == doctest::Approx(10.0));
  auto loose_eps = constrained_shortest_path(2, edges, w, wp, 0, 1, 5.0, 0.3);
  REQUIRE(loose_eps.has_value());
  CHECK(loose_eps->w_cost == doctest::Approx(1.0));
}

TEST_CASE("constrained path: absence is a value") {
  std::vector<Edge> edges{{0, 1, 0, 0}};
  CHECK_FALSE(constrained_shortest_path(2, edges, {1.0}, {3.0}, 0, 1, 1.0, 0.0)
                  .has_value());
}

TEST_CASE("constrained path respects forbidden vertices") {
  // 0-1-2 cheap through vertex 1, expensive direct edge.
  std::vector<Edge> edges{{0, 1, 0, 0}, {1, 2, 0, 0}, {0, 2, 0, 0}};
  CostVector w{1.0, 1.0, 9.0};
  CostVector wp{0.0, 0.0, 0.0};
  std::vector<char> forbidden{0, 1, 0};
  auto path = constrained_shortest_path(3, edges, w, wp, 0, 2, 10.0, 0.0,
                                        forbidden);
  REQUIRE(path.has_value());
  CHECK(path->edges == std::vector<int>{2});
}

TEST_CASE("constrained path DP against the exhaustive path oracle") {
  RandomInstanceSpec spec;
  spec.vertex_count = 8;
  spec.edge_count = 13;
  spec.kind = Kind::SteinerTree;
  SplitMix64 rng(17);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    spec.seed = seed + 300;
    Instance inst = gen_random(spec);
    CostVector w(inst.edge_count()), wp(inst.edge_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
      w[e] = static_cast<double>(rng.next_below(9));
      wp[e] = static_cast<double>(rng.next_below(9));
    }
    int s = 0;
    int t = inst.vertex_count - 1;
    double budget = static_cast<double>(rng.next_below(20));
    double eps = 0.25;

    double exact_best = testutil::kInf;
    testutil::for_all_simple_paths(
        inst.vertex_count, inst.edges, s, t, [&](const std::vector<int>& p) {
          double pw = 0.0, pwp = 0.0;
          for (int e : p) {
            pw += w[e];
            pwp += wp[e];
          }
          if (pwp <= budget) exact_best = std::min(exact_best, pw);
        });

    auto approx = constrained_shortest_path(inst.vertex_count, inst.edges, w,
                                            wp, s, t, budget, eps);
    auto exact = constrained_shortest_path(inst.vertex_count, inst.edges, w,
                                           wp, s, t, budget, 0.0);
    if (exact_best == testutil::kInf) {
      CHECK_FALSE(exact.has_value());
      // The rounded DP may admit a path that only fits after rounding down.
      if (approx) CHECK(approx->wp_cost <= (1.0 + eps) * budget + 1e-9);
      continue;
    }
    REQUIRE(exact.has_value());
    CHECK(exact->w_cost == doctest::Approx(exact_best).epsilon(1e-12));
    CHECK(exact->wp_cost <= budget + 1e-12);
    REQUIRE(approx.has_value());
    CHECK(approx->w_cost <= exact_best + 1e-9);
    CHECK(approx->wp_cost <= (1.0 + eps) * budget + 1e-9);
  }
}

TEST_CASE("constrained path with slack budget is a plain shortest path") {
  RandomInstanceSpec spec;
  spec.vertex_count = 7;
  spec.edge_count = 11;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    spec.seed = seed;
    Instance inst = gen_random(spec);
    CostVector w = inst.midpoint();
    CostVector wp(inst.edge_count(), 1.0);
    double slack = static_cast<double>(inst.edge_count());
    auto path = constrained_shortest_path(inst.vertex_count, inst.edges, w,
                                          wp, 0, inst.vertex_count - 1, slack,
                                          0.05);
    REQUIRE(path.has_value());
    auto sp = dijkstra(inst.vertex_count, inst.edges, w, 0);
    CHECK(path->w_cost ==
          doctest::Approx(sp.dist[inst.vertex_count - 1]).epsilon(1e-9));
  }
}

namespace {

Instance ratio_gadget() {
  // Tree path 0-1-2 (all terminals) with one parallel alternative per edge.
  return make_instance(3,
                       {{0, 1, 0, 0},    // e0: tree, w=4,  w'=1
                        {1, 2, 0, 0},    // e1: tree, w=5,  w'=1
                        {0, 1, 0, 0},    // e2: alt,  w=2,  w'=2  ratio 0.5
                        {1, 2, 0, 0}},   // e3: alt,  w=4,  w'=3  ratio 2.0
                       {0, 1, 2}, Kind::SteinerTree);
}

}  // namespace

TEST_CASE("greedy_swap picks the ratio-minimizing swap") {
  Instance inst = ratio_gadget();
  CostVector w{4.0, 5.0, 2.0, 4.0};
  CostVector wp{1.0, 1.0, 2.0, 3.0};
  EdgeMultiset tree(4);
  tree[0] = tree[1] = 1;

  GreedySwapResult res = greedy_swap(inst, tree, w, wp, 4.0, 1.0, 0.05);
  REQUIRE(!res.stopped);
  CHECK(res.alg[2] == 1);  // ratio (2-1)/(4-2) = 0.5 wins over 2.0
  CHECK(res.alg[0] == 0);
  CHECK(res.alg[1] == 1);
  CHECK(res.alg[3] == 0);

  SUBCASE("rho_min filters the small-gain swap") {
    // Only the gain-2 swap survives rho_min = 1.5; it is still applied.
    GreedySwapResult strict = greedy_swap(inst, tree, w, wp, 4.0, 1.5, 0.05);
    REQUIRE(!strict.stopped);
    CHECK(strict.alg[2] == 1);
  }
  SUBCASE("no qualifying swap stops") {
    GreedySwapResult stop = greedy_swap(inst, tree, w, wp, 4.0, 10.0, 0.05);
    CHECK(stop.stopped);
    CHECK(stop.alg == tree);
  }
  SUBCASE("budget cap hides expensive additions") {
    // chi cap below w'(e2): the 0.5-ratio swap becomes unreachable and the
    // 2.0-ratio swap is chosen instead.
    GreedySwapResult res2 = greedy_swap(inst, tree, w, wp, 1.9, 1.0, 0.05);
    REQUIRE(!res2.stopped);
    CHECK(res2.alg[3] == 1);
  }
}

TEST_CASE("observation: swap identity for the difference potential") {
  Instance inst = ratio_gadget();
  CostVector w{4.0, 5.0, 2.0, 4.0};
  CostVector wp{1.0, 1.0, 2.0, 3.0};
  EdgeMultiset a(4);
  a[0] = a[1] = 1;
  GreedySwapResult step = greedy_swap(inst, a, w, wp, 4.0, 1.0, 0.05);
  const EdgeMultiset& b = step.alg;
  // For any reference solution, c(A)-c(B) equals the drop in the
  // difference potential exactly.
  testutil::for_all_multisets(4, 1, [&](const std::vector<int>& ref) {
    auto diff = [&](const EdgeMultiset& t) {
      double in_t = 0.0, in_ref = 0.0;
      for (int e = 0; e < 4; ++e) {
        if (t[e] && !ref[e]) in_t += w[e];
        if (ref[e] && !t[e]) in_ref += w[e];
      }
      return in_t - in_ref;
    };
    double lhs = multiset_cost(a, w) - multiset_cost(b, w);
    CHECK(lhs == doctest::Approx(diff(a) - diff(b)).epsilon(1e-12));
  });
}

TEST_CASE("double_approx with identical costs collapses to local search") {
  Instance inst = make_instance(
      4, {{0, 1, 0, 0}, {1, 2, 0, 0}, {2, 3, 0, 0}, {0, 3, 0, 0},
          {0, 2, 0, 0}},
      {0, 1, 2, 3}, Kind::SteinerTree);
  CostVector c{1.0, 2.0, 1.0, 2.0, 3.0};
  RobustParams params = fast_params();
  // chi / chi' bracketing the cheapest spanning tree cost.
  std::vector<EdgeMultiset> trees = double_approx(inst, c, c, 4.0, 4.0,
                                                  params);
  REQUIRE(!trees.empty());
  double best = testutil::kInf;
  for (const auto& t : trees) {
    CHECK(is_feasible(inst, t));
    best = std::min(best, multiset_cost(t, c));
  }
  double opt = testutil::exhaustive_steiner_opt(inst, c);
  CHECK(best <= 4.0 * (1.0 + params.eps) * opt + 1e-9);
}

TEST_CASE("double_approx with zero c' degenerates to c local search") {
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 6;
  spec.edge_count = 9;
  RobustParams params = fast_params();
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    spec.seed = seed + 70;
    Instance inst = gen_random(spec);
    CostVector c(inst.edge_count());
    SplitMix64 rng(seed);
    for (double& v : c) v = 1.0 + static_cast<double>(rng.next_below(8));
    CostVector cp(inst.edge_count(), 0.0);
    std::vector<EdgeMultiset> trees =
        double_approx(inst, c, cp, multiset_cost(
            local_search(inst, c, initial_solution(inst, c), params.eps), c),
            0.0, params);
    REQUIRE(!trees.empty());
    auto [opt_cost, opt_tree] = opt_steiner(inst, Realization(c));
    for (const auto& t : trees) {
      double in_alg = 0.0, in_opt = 0.0;
      for (int e = 0; e < inst.edge_count(); ++e) {
        if (t[e] && !opt_tree[e]) in_alg += c[e];
        if (opt_tree[e] && !t[e]) in_opt += c[e];
      }
      CHECK(in_alg <= (4.0 + params.eps) * in_opt + 1e-7);
      CHECK(multiset_cost(t, cp) == 0.0);
    }
  }
}

TEST_CASE("double_approx granularity precondition") {
  Instance inst = make_instance(3, {{0, 1, 0, 0}, {1, 2, 0, 0}}, {0, 2},
                                Kind::SteinerTree);
  CostVector c{1.0, 1.0};
  CostVector cp{0.123456, 0.654321};  // incommensurate with (eps/n)*chi'
  RobustParams params = fast_params();
  CHECK_THROWS_AS(double_approx(inst, c, cp, 2.0, 1.0, params), DomainError);
}

TEST_CASE("double_approx bicriteria guarantee on small two-cost instances") {
  RobustParams params = fast_params();
  RandomInstanceSpec spec;
  spec.kind = Kind::SteinerTree;
  spec.vertex_count = 6;
  spec.edge_count = 9;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    spec.seed = seed + 7;
    Instance inst = gen_random(spec);
    SplitMix64 rng(seed);
    CostVector c(inst.edge_count()), cp(inst.edge_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
      c[e] = 1.0 + static_cast<double>(rng.next_below(6));
      cp[e] = static_cast<double>(rng.next_below(5));
    }

    std::map<std::pair<double, double>, std::vector<EdgeMultiset>> memo;
    int sols = 0;
    testutil::for_all_multisets(
        inst.edge_count(), 1, [&](const std::vector<int>& mult) {
          if (!testutil::is_steiner_tree(inst, mult)) return;
          ++sols;
          EdgeMultiset sol;
          sol.mult = mult;
          double chi = multiset_cost(sol, c);
          double chip = multiset_cost(sol, cp);
          auto key = std::make_pair(chi, chip);
          auto it = memo.find(key);
          if (it == memo.end())
            it = memo.emplace(key, double_approx(inst, c, cp, chi, chip,
                                                 params)).first;
          bool covered = false;
          for (const EdgeMultiset& alg : it->second) {
            double c_alg_only = 0.0, c_sol_only = 0.0, cp_alg = 0.0;
            for (int e = 0; e < inst.edge_count(); ++e) {
              if (alg[e] && !sol[e]) c_alg_only += c[e];
              if (sol[e] && !alg[e]) c_sol_only += c[e];
              cp_alg += alg[e] * cp[e];
            }
            if (c_alg_only <= 4.0 * params.gamma * c_sol_only + 1e-9 &&
                cp_alg <= (4.0 * params.gamma_prime + params.kappa + 1.0 +
                           params.eps) *
                              chip +
                          1e-9) {
              covered = true;
              break;
            }
          }
          CHECK(covered);
        });
    CHECK(sols > 0);
  }
}
