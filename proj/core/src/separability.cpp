#include "msts/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace msts {

SeparabilityReport separability_of(const Instance& inst) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  SeparabilityReport report;
  report.min_pair_distance = kInf;

  const int n = inst.size();
  for (int i = 0; i < n; ++i) {
    report.max_length = std::max(report.max_length, inst.segments[static_cast<size_t>(i)].length());
    for (int j = i + 1; j < n; ++j) {
      const double d = segment_distance(inst.segments[static_cast<size_t>(i)],
                                        inst.segments[static_cast<size_t>(j)]);
      if (d < report.min_pair_distance) {
        report.min_pair_distance = d;
        report.witness = {i, j};
      }
    }
  }
  report.k = report.max_length == 0.0 ? kInf : report.min_pair_distance / report.max_length;
  return report;
}

ChoiceSolution solve_pick_endpoint(const Instance& inst, EndpointPolicy policy,
                                   std::uint64_t seed) {
  const int n = inst.size();
  if (n == 0) throw std::invalid_argument("solve_pick_endpoint: empty instance");

  std::vector<int> choices(static_cast<size_t>(n), 0);
  switch (policy) {
    case EndpointPolicy::kAlwaysA:
      break;
    case EndpointPolicy::kAlwaysB:
      choices.assign(static_cast<size_t>(n), 1);
      break;
    case EndpointPolicy::kSeededRandom: {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < n; ++i) {
        choices[static_cast<size_t>(i)] = static_cast<int>(rng() & 1u);
      }
      break;
    }
  }

  auto sol = solution_from_choices(inst, std::move(choices));
  const auto report = separability_of(inst);
  sol.guarantee = std::isinf(report.k) ? 1.0 : 1.0 + 1.0 / report.k;
  return sol;
}

}  // namespace msts
