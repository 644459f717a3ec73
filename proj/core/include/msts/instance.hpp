#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "msts/geometry.hpp"

namespace msts {

// A set of pairwise disjoint segments. One endpoint of each must be chosen.
struct Instance {
  std::vector<Segment> segments;
  std::string name;

  int size() const { return static_cast<int>(segments.size()); }
};

struct ValidationReport {
  // Pairs (i, j), i < j, of segments that are not strictly disjoint.
  std::vector<std::pair<int, int>> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Instance& inst);

// A feasible solution: one endpoint per segment plus a spanning tree of the
// chosen points. tree.nodes[i] is the chosen endpoint of segment i.
struct ChoiceSolution {
  std::vector<int> choices;  // 0 = endpoint a, 1 = endpoint b
  PointTree tree;
  double cost = 0.0;
  // Approximation factor claimed by the producing algorithm (1 = exact).
  double guarantee = 0.0;
};

// Chosen points + their Euclidean MST; the canonical way to realize a choice
// vector as a solution.
ChoiceSolution solution_from_choices(const Instance& inst, std::vector<int> choices);

// Text format:
//   MSTS <n>
//   x1 y1 x2 y2        (n lines)
// '#' starts a comment; a "# name: <name>" comment carries the instance name.
// strict = reject instances whose segments are not pairwise disjoint.
Instance parse_instance(std::istream& in, bool strict = true);
Instance parse_instance_file(const std::string& path, bool strict = true);
std::string serialize_instance(const Instance& inst);

// Solution format:
//   MSTS-SOL <n> <cost>
//   c1 ... cn          (selector line, each 0 or 1)
//   i j                (n-1 tree edge lines, segment indices)
std::string serialize_solution(const ChoiceSolution& sol);
ChoiceSolution parse_solution(std::istream& in, const Instance& inst);

// Rejection sampling in a square box that grows until all n segments fit with
// the requested pairwise separation. Deterministic across platforms: all
// randomness comes from std::mt19937_64(seed) with inline bits-to-double
// conversion (no std::uniform_*_distribution).
Instance random_instance(int n, std::uint64_t seed, double min_separation,
                         double max_length);

// Print a double with 17 significant digits (round-trips exactly).
std::string format_double(double v);

}  // namespace msts
