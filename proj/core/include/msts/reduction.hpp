#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msts/cnf.hpp"
#include "msts/instance.hpp"

namespace msts {

enum class ReductionVariant {
  kMsts,     // segments as constructed
  kMinMsts,  // every horizontal segment extended by 1/2 at both ends
};

struct SegmentRole {
  enum class Kind { kVariable, kLiteral, kClause };
  Kind kind = Kind::kVariable;
  int var = 0;        // 1-based variable (variable/literal gadgets)
  int part = 0;       // 1..5 within a variable gadget, 1..6 within a literal gadget
  int occ_pos = 0;    // global literal position j (literal gadgets)
  int occ_index = 0;  // k-th occurrence of its variable (literal gadgets)
  int clause = 0;     // 1-based clause (clause segments)
};

// Geometry of the Max-2-SAT reduction: 5 segments per variable, 6 per literal
// occurrence, 1 per clause (5n + 13m total). Variable gadgets sit on the
// positive x-axis left to right, literal gadgets on the negative x-axis right
// to left; all assignment-dependent structure lives on epsilon-scale
// horizontal levels above y = 0.
//
// Segment indices list all horizontals first (literal, then variable, then
// clause) and all verticals last. The exact solver branches in index order,
// so the epsilon-scale parking decisions are fixed before any vertical is;
// once they are, a wrong vertical choice is visible to the lower bound
// immediately, which keeps the search tree polynomial in practice. (With
// verticals first, the still-free horizontals bridge distant column tops at
// epsilon cost inside the bound and nothing prunes.) Literal horizontals come
// before variable ones so that among equal-cost optima the solver's
// depth-first order returns one whose literal parks decode honestly.
struct ReductionLayout {
  Instance instance;
  std::vector<SegmentRole> roles;
  Cnf2Formula formula;
  ReductionVariant variant = ReductionVariant::kMsts;

  double unit = 0.5;    // column spacing; one uniform grid across both zones
  double lambda = 4.0;  // vertical segment length
  double pitch = 2.0;   // gadget-to-gadget spacing (4 columns, no gap)
  double eps = 0.0;

  // Cost of the optimal tree on the clause-free part; the full optimum is
  // baseline_cost + (m - k*) * eps where k* is the Max-2-SAT optimum.
  double baseline_cost = 0.0;

  int num_vars() const { return formula.num_vars; }
  int num_clauses() const { return formula.num_clauses(); }

  // Segment indices. l is 1-based within the gadget; j is the global literal
  // position (1..2m); c is the 1-based clause index.
  int var_segment(int i, int l) const {
    return l == 5 ? num_clauses() * 4 + (i - 1)
                  : num_clauses() * 5 + num_vars() + (i - 1) * 4 + (l - 1);
  }
  int lit_segment(int j, int l) const {
    return l >= 5 ? (j - 1) * 2 + (l - 5)
                  : num_clauses() * 5 + num_vars() * 5 + (j - 1) * 4 + (l - 1);
  }
  int clause_segment(int c) const { return num_clauses() * 4 + num_vars() + (c - 1); }

  // Columns sit on one contiguous half-unit grid, four per gadget with no
  // gaps; literal gadgets fill the negative side (position 1 rightmost),
  // variable gadgets the positive side. A gap-free grid matters for the
  // MIN-MSTS variant: every half-unit extension of a horizontal and every
  // park-to-park midpoint then lands exactly above some column top, where
  // choosing it costs at least as much as the endpoint it replaced. Any
  // off-grid point between two structures could instead stand in for the
  // ground-level bridge between them at O(eps^2) overhead while saving an
  // O(eps) parking cost.
  double var_column_x(int i, int l) const { return (i - 1) * pitch + (l - 1) * unit; }
  double lit_column_x(int j, int l) const { return -j * pitch + (l - 1) * unit; }
};

// eps defaults to min(0.01, 1 / (32 (m + 1))). An explicit override must keep
// every horizontal level below a quarter of the unit spacing, else
// std::invalid_argument("epsilon too large").
ReductionLayout build_gadgets(const Cnf2Formula& formula,
                              ReductionVariant variant = ReductionVariant::kMsts,
                              std::optional<double> eps_override = std::nullopt);

// The intended tree for an assignment: vertical tops everywhere, horizontals
// wired to the assignment's side, clause segments attached to a satisfied
// literal's column when one exists (free) and by an eps-length edge otherwise.
std::vector<int> canonical_choices(const ReductionLayout& layout,
                                   const std::vector<bool>& assignment);
ChoiceSolution canonical_tree(const ReductionLayout& layout,
                              const std::vector<bool>& assignment);

// Reads the variable horizontals' chosen endpoints back out of a feasible
// solution: connected above s^2's top means false, above s^4's top means true.
// When the connection is indirect, walking the solution tree within the same
// column normalizes it. Throws std::runtime_error("undecodable solution") for
// trees without a column connection.
std::vector<bool> decode_assignment(const ReductionLayout& layout,
                                    const ChoiceSolution& sol);

// Sidecar provenance: one "<index> <role> <params>" line per segment.
std::string serialize_roles(const ReductionLayout& layout);
std::vector<SegmentRole> parse_roles(std::istream& in, int num_segments);

}  // namespace msts
