#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "msts/cnf.hpp"
#include "msts/instance.hpp"

namespace msts {

struct BnBConfig {
  std::uint64_t node_budget = 0;  // 0 = unlimited; counted per search node
  bool use_lower_bound = true;    // false = plain exhaustive enumeration
};

// Raised when the node budget runs out; carries the incumbent found so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& msg, ChoiceSolution best)
      : std::runtime_error(msg), best_(std::move(best)) {}

  const ChoiceSolution& best_so_far() const { return best_; }

 private:
  ChoiceSolution best_;
};

// Optimal MSTS solution by depth-first enumeration of choice vectors in
// lexicographic order, optionally pruned with an admissible lower bound
// (MST over per-segment minimum point-set distances). Among equal-cost optima
// the lexicographically smallest choice vector wins. Guard: n <= 48.
ChoiceSolution brute_force_msts(const Instance& inst, const BnBConfig& cfg = {});

// Generalization used by relaxation experiments: each segment offers an
// arbitrary finite candidate point set instead of two endpoints.
struct MultiChoiceResult {
  std::vector<int> choices;
  double cost = 0.0;
};
MultiChoiceResult best_choice_over_sets(const std::vector<std::vector<Point>>& options,
                                        const BnBConfig& cfg = {});

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

struct GraphTree {
  std::vector<std::pair<int, int>> edges;  // node index pairs, first < second
  double cost = 0.0;
};

// Minimum Steiner tree in an arbitrary weighted graph (Dreyfus-Wagner over
// terminal subsets). Guard: at most 14 terminals. Throws GuardError if the
// terminals are not connected ("no Steiner tree").
GraphTree exact_steiner(int num_nodes, const std::vector<WeightedEdge>& edges,
                        const std::vector<int>& terminals);

struct Max2SatResult {
  std::vector<bool> assignment;
  int satisfied = 0;
};

// Exhaustive Max-2-SAT: maximizes satisfied clauses; among maximizers the
// lexicographically smallest assignment (false < true) wins. Guard: <= 24 vars.
Max2SatResult max2sat_brute(const Cnf2Formula& formula);

}  // namespace msts
