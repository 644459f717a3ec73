#include "msts/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "msts/errors.hpp"

namespace msts {

namespace {

struct Occurrence {
  int var = 0;        // 1-based
  bool positive = true;
  int pos = 0;        // global literal position j, 1-based
  int index = 0;      // k-th occurrence of this variable, 1-based
};

std::vector<Occurrence> occurrences_of(const Cnf2Formula& formula) {
  std::vector<Occurrence> occs;
  std::vector<int> seen(static_cast<size_t>(formula.num_vars) + 1, 0);
  int pos = 0;
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause) {
      ++pos;
      ++seen[static_cast<size_t>(lit.var)];
      occs.push_back({lit.var, lit.positive, pos, seen[static_cast<size_t>(lit.var)]});
    }
  }
  return occs;
}

// Horizontal levels (in units of eps) and the column each horizontal's far
// end hangs over. Every horizontal endpoint sits exactly above some vertical
// segment's top, so in a minimum tree each occupied column pays its tallest
// parked level and nothing else (lower parks slot into the vertical chain for
// free). The scheme below exploits that "absorption":
//   - occurrence k >= 2 of a variable parks its far ends above occurrence
//     k-1's own columns, at strictly lower levels, so a consistently oriented
//     occurrence rides its predecessor's chain for free and no two
//     occurrences ever share a variable-gadget column (sharing would let the
//     tree collapse several levels into one);
//   - the variable horizontal sits above its first occurrence's levels (so
//     it absorbs the matching far end), except for variables with at most
//     one occurrence where it sits below them and both levels are paid no
//     matter the orientation;
//   - per variable, s^5 levels and s^6 levels have equal sums, making the
//     clause-free cost identical for every assignment; any inconsistent or
//     doubled-up parking strands a level >= 2 eps, more than the single eps a
//     clause segment could save.
//
// The parking horizontals are tilted: the far end sits kFarLift levels above
// the own end. An absorbed far end is still free (the absorber above it is a
// full band higher), but a far end that actually pays now costs kFarLift eps
// more than the own end it replaced. Without the tilt, a trailing occurrence
// could relocate its paid level onto the predecessor's column at equal cost
// and shelter that column's clause endpoint without satisfying the literal.
constexpr double kFarLift = 2.0;

struct Levels {
  std::vector<double> lit5;  // per global position j (1-based), s^5 level
  std::vector<double> lit6;  // per global position j, s^6 level
  std::vector<int> prev;     // previous occurrence position of the same
                             // variable, or 0 for the first occurrence
  std::vector<double> var5;  // per variable i (1-based), variable horizontal level
};

Levels assign_levels(const Cnf2Formula& formula, const std::vector<Occurrence>& occs) {
  const int n = formula.num_vars;
  const int m2 = static_cast<int>(occs.size());
  const int m = formula.num_clauses();
  Levels lv;
  lv.lit5.assign(static_cast<size_t>(m2) + 1, 0.0);
  lv.lit6.assign(static_cast<size_t>(m2) + 1, 0.0);
  lv.prev.assign(static_cast<size_t>(m2) + 1, 0);
  lv.var5.assign(static_cast<size_t>(n) + 1, 3.0);
  // Adjacent variable horizontals touch tip-to-tip once the MIN-MSTS variant
  // extends them, so alternate their levels by half a slot.
  for (int i = 1; i <= n; ++i) {
    lv.var5[static_cast<size_t>(i)] += 0.5 * ((i - 1) % 2);
  }

  std::vector<std::vector<int>> by_var(static_cast<size_t>(n) + 1);
  for (const auto& occ : occs) {
    by_var[static_cast<size_t>(occ.var)].push_back(occ.pos);
  }

  for (int i = 1; i <= n; ++i) {
    const auto& positions = by_var[static_cast<size_t>(i)];
    const int c = static_cast<int>(positions.size());
    for (int k = 1; k < c; ++k) {
      lv.prev[static_cast<size_t>(positions[static_cast<size_t>(k)])] =
          positions[static_cast<size_t>(k - 1)];
    }
    for (int k = 0; k < c; ++k) {
      const int j = positions[static_cast<size_t>(k)];
      // Bands of width 4 descending with the global position keep every
      // level pair strictly below its predecessor's and globally distinct.
      const double base = 4.0 * (2 * m - j) + 6.0;
      double delta = 0.5;
      double sign = k % 2 == 0 ? 1.0 : -1.0;
      if (c % 2 != 0 && c >= 3 && k >= c - 3) {
        // Odd occurrence counts balance the level sums over the last three
        // occurrences: +1/2, -1/4, -1/4.
        sign = k == c - 3 ? 1.0 : -1.0;
        delta = k == c - 3 ? 0.5 : 0.25;
      }
      lv.lit5[static_cast<size_t>(j)] = base + sign * delta;
      lv.lit6[static_cast<size_t>(j)] = base - sign * delta;
    }
    if (c >= 2) {
      const int first = positions[0];
      const double top = std::max(lv.lit5[static_cast<size_t>(first)],
                                  lv.lit6[static_cast<size_t>(first)]);
      // Above the first occurrence's far ends (own level + kFarLift) with
      // margin, so the matching far end is always absorbed.
      lv.var5[static_cast<size_t>(i)] = top + kFarLift + 0.75 + 0.5 * ((i - 1) % 2);
    }
  }
  return lv;
}

bool is_horizontal_role(const SegmentRole& role) {
  switch (role.kind) {
    case SegmentRole::Kind::kVariable:
      return role.part == 5;
    case SegmentRole::Kind::kLiteral:
      return role.part >= 5;
    case SegmentRole::Kind::kClause:
      return true;
  }
  return false;
}

}  // namespace

ReductionLayout build_gadgets(const Cnf2Formula& formula, ReductionVariant variant,
                              std::optional<double> eps_override) {
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause) {
      if (lit.var < 1 || lit.var > formula.num_vars) {
        throw std::invalid_argument("literal out of range");
      }
    }
  }

  ReductionLayout layout;
  layout.formula = formula;
  layout.variant = variant;

  const int n = formula.num_vars;
  const int m = formula.num_clauses();

  const auto occs = occurrences_of(formula);
  const auto levels = assign_levels(formula, occs);

  // Budget: the sum of every epsilon-scale cost any solution can pay (each
  // horizontal attaches vertically at no more than its top level) must stay
  // well below a quarter of the column spacing. Then no point that is off the
  // column grid horizontally -- in particular no sampled midpoint of the
  // MIN-MSTS variant -- can ever pay for itself: attaching it costs at least
  // 0.25 while the parking it replaces costs less than that in total.
  double level_sum = static_cast<double>(m);
  for (const auto& occ : occs) {
    level_sum += levels.lit5[static_cast<size_t>(occ.pos)] +
                 levels.lit6[static_cast<size_t>(occ.pos)] + 2.0 * kFarLift;
  }
  for (int i = 1; i <= n; ++i) level_sum += levels.var5[static_cast<size_t>(i)];

  const double default_eps = std::min(0.01, 0.15 / level_sum);
  layout.eps = eps_override.value_or(default_eps);
  if (!(layout.eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (layout.eps * level_sum >= 0.2) {
    throw std::invalid_argument("epsilon too large");
  }
  const double eps = layout.eps;

  const int total = 5 * n + 13 * m;
  layout.instance.segments.resize(static_cast<size_t>(total));
  layout.roles.resize(static_cast<size_t>(total));
  auto put = [&](int idx, Segment s, SegmentRole role) {
    layout.instance.segments[static_cast<size_t>(idx)] = s;
    layout.roles[static_cast<size_t>(idx)] = role;
  };

  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= 4; ++l) {
      const double x = layout.var_column_x(i, l);
      put(layout.var_segment(i, l), {{x, 0.0}, {x, -layout.lambda}},
          {SegmentRole::Kind::kVariable, i, l, 0, 0, 0});
    }
    const double y = levels.var5[static_cast<size_t>(i)] * eps;
    // The variable horizontal parks over s^1 (false) or s^3 (true). Using the
    // odd columns here while literal horizontals own the even ones keeps the
    // midpoint of every extended literal horizontal (MIN-MSTS variant) a
    // quarter unit away from every column, where it can never pay off.
    put(layout.var_segment(i, 5),
        {{layout.var_column_x(i, 1), y}, {layout.var_column_x(i, 3), y}},
        {SegmentRole::Kind::kVariable, i, 5, 0, 0, 0});
  }

  for (const auto& occ : occs) {
    const int j = occ.pos;
    for (int l = 1; l <= 4; ++l) {
      const double x = layout.lit_column_x(j, l);
      put(layout.lit_segment(j, l), {{x, 0.0}, {x, -layout.lambda}},
          {SegmentRole::Kind::kLiteral, occ.var, l, j, occ.index, 0});
    }
    const double y5 = levels.lit5[static_cast<size_t>(j)] * eps;
    const double y6 = levels.lit6[static_cast<size_t>(j)] * eps;
    const int prev = levels.prev[static_cast<size_t>(j)];
    // s^5's left end hangs over the gadget's own s^4, s^6's over its own
    // s^2 (opposite offset classes, so both horizontals' midpoints sit over
    // never-parked columns). The right ends hang over the variable gadget
    // (first occurrence) or over the previous occurrence's own park columns,
    // crosswise so that a consistently oriented far end is absorbed by the
    // predecessor's chain.
    const double x5 = prev == 0 ? layout.var_column_x(occ.var, 1)
                                : layout.lit_column_x(prev, 2);
    const double x6 = prev == 0 ? layout.var_column_x(occ.var, 3)
                                : layout.lit_column_x(prev, 4);
    const double lift = kFarLift * eps;
    put(layout.lit_segment(j, 5), {{layout.lit_column_x(j, 4), y5}, {x5, y5 + lift}},
        {SegmentRole::Kind::kLiteral, occ.var, 5, j, occ.index, 0});
    put(layout.lit_segment(j, 6), {{layout.lit_column_x(j, 2), y6}, {x6, y6 + lift}},
        {SegmentRole::Kind::kLiteral, occ.var, 6, j, occ.index, 0});
  }

  for (int c = 1; c <= m; ++c) {
    // First literal of the clause sits at position 2c-1 (the right, closer to
    // the origin), the second at 2c. A positive literal's clause endpoint sits
    // above the column carrying the literal's "true" park (s^5's own end), a
    // negative one above the "false" park column (s^6's own end).
    const auto& first = occs[static_cast<size_t>(2 * c - 2)];
    const auto& second = occs[static_cast<size_t>(2 * c - 1)];
    const double rx = layout.lit_column_x(first.pos, first.positive ? 4 : 2);
    const double lx = layout.lit_column_x(second.pos, second.positive ? 4 : 2);
    put(layout.clause_segment(c), {{lx, eps}, {rx, eps}},
        {SegmentRole::Kind::kClause, 0, 0, 0, 0, c});
  }

  // Baseline over the clause-free part, from the canonical all-false tree,
  // computed on the unextended geometry. Clause segments form one contiguous
  // index block; drop it.
  {
    const auto cb = layout.clause_segment(1);
    Instance restricted;
    restricted.segments = layout.instance.segments;
    restricted.segments.erase(restricted.segments.begin() + cb,
                              restricted.segments.begin() + cb + m);
    auto choices = canonical_choices(layout, std::vector<bool>(static_cast<size_t>(n), false));
    choices.erase(choices.begin() + cb, choices.begin() + cb + m);
    layout.baseline_cost = solution_from_choices(restricted, choices).cost;
  }

  if (variant == ReductionVariant::kMinMsts) {
    for (size_t idx = 0; idx < layout.instance.segments.size(); ++idx) {
      if (!is_horizontal_role(layout.roles[idx])) continue;
      auto& s = layout.instance.segments[idx];
      if (s.a.x > s.b.x) std::swap(s.a, s.b);
      s.a.x -= 0.5;
      s.b.x += 0.5;
    }
  }

  layout.instance.name = (variant == ReductionVariant::kMinMsts ? "min-msts-" : "msts-") +
                         std::to_string(n) + "v" + std::to_string(m) + "c";

  const auto report = validate(layout.instance);
  if (!report.ok()) throw InternalError("build_gadgets: produced overlapping segments");
  return layout;
}

std::vector<int> canonical_choices(const ReductionLayout& layout,
                                   const std::vector<bool>& assignment) {
  const int n = layout.num_vars();
  const int m = layout.num_clauses();
  if (static_cast<int>(assignment.size()) != n) {
    throw std::invalid_argument("assignment size does not match formula");
  }
  std::vector<int> choices(layout.instance.segments.size(), 0);
  const auto occs = occurrences_of(layout.formula);

  for (int i = 1; i <= n; ++i) {
    // Verticals keep their tops (choice 0). The variable horizontal hangs
    // above s^1 when false, above s^3 when true.
    choices[static_cast<size_t>(layout.var_segment(i, 5))] =
        assignment[static_cast<size_t>(i - 1)] ? 1 : 0;
  }
  for (const auto& occ : occs) {
    const bool value = assignment[static_cast<size_t>(occ.var - 1)];
    // True keeps s^5's left end at the literal gadget and sends s^6 to the
    // variable gadget; false mirrors that.
    choices[static_cast<size_t>(layout.lit_segment(occ.pos, 5))] = value ? 0 : 1;
    choices[static_cast<size_t>(layout.lit_segment(occ.pos, 6))] = value ? 1 : 0;
  }
  for (int c = 1; c <= m; ++c) {
    const auto& first = occs[static_cast<size_t>(2 * c - 2)];
    const auto& second = occs[static_cast<size_t>(2 * c - 1)];
    const bool first_sat =
        assignment[static_cast<size_t>(first.var - 1)] == first.positive;
    const bool second_sat =
        assignment[static_cast<size_t>(second.var - 1)] == second.positive;
    // Endpoint b is the right end (first literal), endpoint a the left.
    choices[static_cast<size_t>(layout.clause_segment(c))] =
        first_sat ? 1 : (second_sat ? 0 : 1);
  }
  return choices;
}

ChoiceSolution canonical_tree(const ReductionLayout& layout,
                              const std::vector<bool>& assignment) {
  return solution_from_choices(layout.instance, canonical_choices(layout, assignment));
}

std::vector<bool> decode_assignment(const ReductionLayout& layout,
                                    const ChoiceSolution& sol) {
  const int n = layout.num_vars();
  if (static_cast<int>(sol.choices.size()) != layout.instance.size()) {
    throw std::invalid_argument("solution size does not match layout");
  }
  constexpr double kTol = 1e-9;

  // Adjacency over segment indices in the solution tree.
  std::vector<std::vector<int>> adj(sol.choices.size());
  for (const auto& [u, v] : sol.tree.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }

  std::vector<bool> assignment(static_cast<size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    const int seg5 = layout.var_segment(i, 5);
    const Point chosen = sol.tree.nodes[static_cast<size_t>(seg5)];

    const double stretch =
        layout.variant == ReductionVariant::kMinMsts ? 0.5 : 0.0;
    int anchor_l = 0;
    if (std::abs(chosen.x - (layout.var_column_x(i, 1) - stretch)) <= kTol) {
      anchor_l = 1;
    } else if (std::abs(chosen.x - (layout.var_column_x(i, 3) + stretch)) <= kTol) {
      anchor_l = 3;
    } else {
      throw std::runtime_error("undecodable solution");
    }
    const int anchor_seg = layout.var_segment(i, anchor_l);
    const double column_x = layout.var_column_x(i, anchor_l);

    // The chosen end must reach the column's vertical top through tree edges
    // that stay in the column (vertical chains may be permuted; walking the
    // column normalizes the tree before reading it).
    std::vector<char> seen(sol.choices.size(), 0);
    std::queue<int> frontier;
    frontier.push(seg5);
    seen[static_cast<size_t>(seg5)] = 1;
    bool connected = false;
    while (!frontier.empty() && !connected) {
      const int s = frontier.front();
      frontier.pop();
      for (int t : adj[static_cast<size_t>(s)]) {
        if (seen[static_cast<size_t>(t)]) continue;
        const Point p = sol.tree.nodes[static_cast<size_t>(t)];
        if (std::abs(p.x - column_x) > kTol) continue;
        if (t == anchor_seg) {
          connected = true;
          break;
        }
        seen[static_cast<size_t>(t)] = 1;
        frontier.push(t);
      }
    }
    if (!connected) throw std::runtime_error("undecodable solution");
    assignment[static_cast<size_t>(i - 1)] = anchor_l == 3;
  }
  return assignment;
}

std::string serialize_roles(const ReductionLayout& layout) {
  std::string out;
  for (size_t idx = 0; idx < layout.roles.size(); ++idx) {
    const auto& role = layout.roles[idx];
    out += std::to_string(idx) + " ";
    switch (role.kind) {
      case SegmentRole::Kind::kVariable:
        out += "var " + std::to_string(role.var) + " " + std::to_string(role.part);
        break;
      case SegmentRole::Kind::kLiteral:
        out += "lit " + std::to_string(role.var) + " " + std::to_string(role.occ_pos) +
               " " + std::to_string(role.occ_index) + " " + std::to_string(role.part);
        break;
      case SegmentRole::Kind::kClause:
        out += "clause " + std::to_string(role.clause);
        break;
    }
    out += "\n";
  }
  return out;
}

std::vector<SegmentRole> parse_roles(std::istream& in, int num_segments) {
  std::vector<SegmentRole> roles(static_cast<size_t>(num_segments));
  std::vector<char> filled(static_cast<size_t>(num_segments), 0);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("parse error at line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    int idx = -1;
    std::string kind;
    if (!(row >> idx)) continue;
    if (!(row >> kind)) fail("missing role kind");
    if (idx < 0 || idx >= num_segments) fail("segment index out of range");
    SegmentRole role;
    if (kind == "var") {
      role.kind = SegmentRole::Kind::kVariable;
      if (!(row >> role.var >> role.part)) fail("expected 'var <i> <part>'");
    } else if (kind == "lit") {
      role.kind = SegmentRole::Kind::kLiteral;
      if (!(row >> role.var >> role.occ_pos >> role.occ_index >> role.part)) {
        fail("expected 'lit <var> <j> <k> <part>'");
      }
    } else if (kind == "clause") {
      role.kind = SegmentRole::Kind::kClause;
      if (!(row >> role.clause)) fail("expected 'clause <c>'");
    } else {
      fail("unknown role kind");
    }
    roles[static_cast<size_t>(idx)] = role;
    filled[static_cast<size_t>(idx)] = 1;
  }
  for (char f : filled) {
    if (!f) throw ParseError("parse error: missing role for some segment");
  }
  return roles;
}

}  // namespace msts
