#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "msts/exact.hpp"
#include "msts/instance.hpp"
#include "msts/separability.hpp"

using msts::Instance;

TEST_CASE("separability on a hand instance") {
  Instance inst;
  inst.segments = {{{0, 0}, {2, 0}},   // length 2
                   {{0, 1}, {1, 1}},   // distance 1 to the first
                   {{0, 5}, {1, 5}}};
  auto rep = msts::separability_of(inst);
  CHECK(rep.max_length == doctest::Approx(2.0));
  CHECK(rep.min_pair_distance == doctest::Approx(1.0));
  CHECK(rep.k == doctest::Approx(0.5));
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == std::pair<int, int>{0, 1});
}

TEST_CASE("degenerate separability cases") {
  Instance single;
  single.segments = {{{0, 0}, {1, 0}}};
  auto rep1 = msts::separability_of(single);
  CHECK(std::isinf(rep1.k));
  CHECK_FALSE(rep1.witness.has_value());

  Instance points;  // all zero length: k is infinite by convention
  points.segments = {{{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}};
  CHECK(std::isinf(msts::separability_of(points).k));
}

TEST_CASE("pick-endpoint policies") {
  Instance inst;
  inst.segments = {{{0, 0}, {0, 1}}, {{3, 0}, {3, 1}}};
  auto a = msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kAlwaysA);
  CHECK(a.choices == std::vector<int>{0, 0});
  auto b = msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kAlwaysB);
  CHECK(b.choices == std::vector<int>{1, 1});
  auto r1 = msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kSeededRandom, 123);
  auto r2 = msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kSeededRandom, 123);
  CHECK(r1.choices == r2.choices);
}

TEST_CASE("pick-endpoint stays within 1 + 1/k of optimal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    auto inst = msts::random_instance(9, rng(), 0.8, 0.7);
    auto rep = msts::separability_of(inst);
    auto sol = msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kAlwaysA);
    auto opt = msts::brute_force_msts(inst);
    double bound = 1.0 + 1.0 / rep.k;
    CHECK(sol.guarantee == doctest::Approx(bound));
    CHECK(sol.cost <= bound * opt.cost + 1e-9);
  }
}
