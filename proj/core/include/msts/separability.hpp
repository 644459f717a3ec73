#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "msts/instance.hpp"

namespace msts {

// Separability k = (minimum pairwise segment distance) / (maximum segment
// length). k = +infinity when the longest segment has zero length or fewer
// than two segments exist.
struct SeparabilityReport {
  double k = 0.0;
  double max_length = 0.0;
  double min_pair_distance = 0.0;  // +infinity when n < 2
  std::optional<std::pair<int, int>> witness;  // closest segment pair
};

SeparabilityReport separability_of(const Instance& inst);

enum class EndpointPolicy {
  kAlwaysA,
  kAlwaysB,
  kSeededRandom,
};

// Pick-any-endpoint heuristic: chooses endpoints by policy and spans them
// with an MST. Recorded guarantee is 1 + 1/k (1 when k is infinite).
ChoiceSolution solve_pick_endpoint(const Instance& inst,
                                   EndpointPolicy policy = EndpointPolicy::kAlwaysA,
                                   std::uint64_t seed = 0);

}  // namespace msts
