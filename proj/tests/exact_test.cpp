#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "msts/errors.hpp"
#include "msts/exact.hpp"
#include "msts/instance.hpp"

using msts::BnBConfig;
using msts::Instance;
using msts::Point;

TEST_CASE("brute force picks the cheap endpoints") {
  // two vertical segments; the optimum joins the two near tops
  Instance inst;
  inst.segments = {{{0, 0}, {0, 5}}, {{1, 0}, {1, 5}}};
  auto sol = msts::brute_force_msts(inst);
  CHECK(sol.cost == doctest::Approx(1.0));
  CHECK(sol.choices[0] == sol.choices[1]);
  CHECK(sol.guarantee == doctest::Approx(1.0));
  CHECK(sol.tree.edges.size() == 1);
}

TEST_CASE("pruned and unpruned search agree, including tie-broken choices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = msts::random_instance(9, rng(), 0.4, 1.5);
    BnBConfig plain;
    plain.use_lower_bound = false;
    auto a = msts::brute_force_msts(inst);
    auto b = msts::brute_force_msts(inst, plain);
    CHECK(a.cost == doctest::Approx(b.cost).epsilon(1e-12));
    CHECK(a.choices == b.choices);
  }
}

TEST_CASE("ties resolve to the lexicographically smallest choice vector") {
  // mirror-symmetric pair: both endpoints of each segment are equivalent
  Instance inst;
  inst.segments = {{{-1, 0}, {1, 0}}, {{-1, 3}, {1, 3}}};
  auto sol = msts::brute_force_msts(inst);
  CHECK(sol.choices == std::vector<int>{0, 0});
}

TEST_CASE("size guard and node budget") {
  Instance big;
  for (int i = 0; i < 49; ++i)
    big.segments.push_back({{3.0 * i, 0.0}, {3.0 * i, 1.0}});
  CHECK_THROWS_AS(msts::brute_force_msts(big), msts::GuardError);

  auto inst = msts::random_instance(10, 3, 0.4, 1.5);
  BnBConfig tiny;
  tiny.node_budget = 2;
  CHECK_THROWS_AS(msts::brute_force_msts(inst, tiny), msts::BudgetExceeded);
  try {
    msts::brute_force_msts(inst, tiny);
  } catch (const msts::BudgetExceeded& e) {
    // whatever incumbent exists is carried along
    CHECK(e.best_so_far().choices.size() <= 10);
  }
}

TEST_CASE("best_choice_over_sets generalizes the two-endpoint search") {
  auto inst = msts::random_instance(8, 11, 0.4, 1.5);
  std::vector<std::vector<Point>> options;
  for (const auto& s : inst.segments) options.push_back({s.a, s.b});
  auto multi = msts::best_choice_over_sets(options);
  auto sol = msts::brute_force_msts(inst);
  CHECK(multi.cost == doctest::Approx(sol.cost).epsilon(1e-12));
  CHECK(multi.choices == sol.choices);

  // adding a strictly better candidate must lower the cost
  options[0].push_back(options[1][0]);
  auto enriched = msts::best_choice_over_sets(options);
  CHECK(enriched.cost <= multi.cost + 1e-12);
}

TEST_CASE("exact steiner on a hand graph") {
  // terminals 0 and 3 joined either directly (cost 10) or via node 1 (2 + 3)
  std::vector<msts::WeightedEdge> edges = {{0, 3, 10}, {0, 1, 2}, {1, 3, 3}, {2, 3, 7}};
  auto t = msts::exact_steiner(4, edges, {0, 3});
  CHECK(t.cost == doctest::Approx(5.0));
  CHECK(t.edges.size() == 2);

  // a Steiner point pays off: star center 4 vs triangle sides
  std::vector<msts::WeightedEdge> star = {
      {0, 1, 10}, {1, 2, 10}, {0, 2, 10}, {0, 4, 4}, {1, 4, 4}, {2, 4, 4}};
  auto s = msts::exact_steiner(5, star, {0, 1, 2});
  CHECK(s.cost == doctest::Approx(12.0));
}

TEST_CASE("exact steiner guards") {
  std::vector<msts::WeightedEdge> edges = {{0, 1, 1}};
  CHECK_THROWS_AS(msts::exact_steiner(4, edges, {0, 3}), msts::GuardError);  // disconnected
  std::vector<int> many;
  std::vector<msts::WeightedEdge> chain;
  for (int i = 0; i < 15; ++i) {
    many.push_back(i);
    if (i) chain.push_back({i - 1, i, 1});
  }
  CHECK_THROWS_AS(msts::exact_steiner(15, chain, many), msts::GuardError);  // too many terminals
}
