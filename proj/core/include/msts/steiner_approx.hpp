#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "msts/exact.hpp"
#include "msts/instance.hpp"

namespace msts {

// Auxiliary graph with 3 nodes per segment i:
//   3i   endpoint a,  3i+1 endpoint b,  3i+2 terminal o_i.
// Edges: zero-weight (a, o_i) and (b, o_i); no (a, b) edge; every endpoint
// pair across different segments at Euclidean weight. Terminals have no
// coordinates and no other incident edges.
struct AuxGraph {
  int num_segments = 0;
  std::vector<Point> coords;  // size 3n; entries for terminals are unused

  static int endpoint_a(int i) { return 3 * i; }
  static int endpoint_b(int i) { return 3 * i + 1; }
  static int terminal(int i) { return 3 * i + 2; }
  static bool is_terminal(int v) { return v % 3 == 2; }
  static int segment_of(int v) { return v / 3; }

  int node_count() const { return 3 * num_segments; }
  bool has_edge(int u, int v) const;
  double edge_weight(int u, int v) const;  // throws if the edge is absent

  std::vector<WeightedEdge> edge_list() const;
  std::vector<int> terminal_nodes() const;
};

AuxGraph build_aux_graph(const Instance& inst);

// A tree in the auxiliary graph (or its metric completion, after repair)
// spanning all terminals. Edge weights: 0 if an endpoint is a terminal,
// Euclidean distance between coordinates otherwise.
struct SteinerResult {
  std::vector<std::pair<int, int>> edges;  // node pairs, first < second, sorted
  double cost = 0.0;
  double guarantee_factor = 0.0;  // alpha: cost <= alpha * optimal Steiner tree
};

double steiner_edge_weight(const AuxGraph& g, int u, int v);
double steiner_tree_cost(const AuxGraph& g, const std::vector<std::pair<int, int>>& edges);

// Pluggable Steiner subroutine, keyed by its guarantee factor.
using SteinerSubroutine = std::function<SteinerResult(const AuxGraph&)>;

// Default subroutine (alpha = 2): MST over the terminal distance metric
// (min endpoint-pair distance between segments), expanded through the
// auxiliary graph and pruned of non-terminal leaves.
SteinerResult approx_steiner(const AuxGraph& g);

// Exact subroutine (alpha = 1), limited by the Dreyfus-Wagner terminal guard.
SteinerResult exact_steiner_subroutine(const AuxGraph& g);

// Two-pass feasibility repair: roots the tree at the lexicographically
// smallest non-terminal, walks it pre-order with children in counterclockwise
// edge-angle order, stacks segments whose both endpoints appear, then deletes
// the offending endpoint of each popped segment and chains its remaining
// neighbors counterclockwise. Asserts the result stays a tree and costs at
// most twice the input.
SteinerResult repair_tree(const AuxGraph& g, const SteinerResult& st);

// Full pipeline: build the auxiliary graph, run the subroutine, repair, and
// map the surviving endpoints back to a feasible solution. The recorded
// guarantee is 2 * subroutine guarantee.
ChoiceSolution solve_approx(const Instance& inst);
ChoiceSolution solve_approx(const Instance& inst, const SteinerSubroutine& subroutine);

}  // namespace msts
