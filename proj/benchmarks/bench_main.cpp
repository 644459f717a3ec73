#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "msts/exact.hpp"
#include "msts/geometry.hpp"
#include "msts/instance.hpp"
#include "msts/separability.hpp"
#include "msts/steiner_approx.hpp"

namespace {

std::vector<msts::Point> random_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<msts::Point> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back({(rng() >> 11) * 0x1.0p-53 * 100.0, (rng() >> 11) * 0x1.0p-53 * 100.0});
  }
  return pts;
}

void BM_EuclideanMst(benchmark::State& state) {
  auto pts = random_points(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(msts::euclidean_mst(pts).cost);
  }
}
BENCHMARK(BM_EuclideanMst)->Arg(32)->Arg(128)->Arg(512);

void BM_SolveApprox(benchmark::State& state) {
  auto inst = msts::random_instance(static_cast<int>(state.range(0)), 2, 0.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(msts::solve_approx(inst).cost);
  }
}
BENCHMARK(BM_SolveApprox)->Arg(16)->Arg(64)->Arg(128);

void BM_BruteForce(benchmark::State& state) {
  auto inst = msts::random_instance(static_cast<int>(state.range(0)), 3, 0.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(msts::brute_force_msts(inst).cost);
  }
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14)->Arg(18);

void BM_PickEndpoint(benchmark::State& state) {
  auto inst = msts::random_instance(static_cast<int>(state.range(0)), 4, 0.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        msts::solve_pick_endpoint(inst, msts::EndpointPolicy::kAlwaysA).cost);
  }
}
BENCHMARK(BM_PickEndpoint)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
