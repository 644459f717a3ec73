#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "msts/cnf.hpp"
#include "msts/exact.hpp"
#include "msts/instance.hpp"
#include "msts/reduction.hpp"

using msts::Cnf2Formula;
using msts::Literal;
using msts::ReductionVariant;

namespace {

Cnf2Formula formula(int num_vars, std::vector<std::array<Literal, 2>> clauses) {
  Cnf2Formula f;
  f.num_vars = num_vars;
  f.clauses = std::move(clauses);
  return f;
}

int max_sat(const Cnf2Formula& f) {
  int best = 0;
  for (int mask = 0; mask < (1 << f.num_vars); ++mask) {
    std::vector<bool> assignment;
    for (int i = 0; i < f.num_vars; ++i) assignment.push_back((mask >> i) & 1);
    best = std::max(best, msts::satisfied_count(f, assignment));
  }
  return best;
}

}  // namespace

TEST_CASE("gadget counts, roles and validity") {
  auto f = formula(2, {{Literal{1, true}, Literal{2, false}}});
  auto lay = msts::build_gadgets(f);
  CHECK(lay.instance.size() == 5 * 2 + 13 * 1);
  CHECK(msts::validate(lay.instance).ok());
  CHECK(lay.eps > 0);

  int vars = 0, lits = 0, clauses = 0;
  for (const auto& r : lay.roles) {
    using K = msts::SegmentRole::Kind;
    if (r.kind == K::kVariable) ++vars;
    if (r.kind == K::kLiteral) ++lits;
    if (r.kind == K::kClause) ++clauses;
  }
  CHECK(vars == 10);
  CHECK(lits == 12);
  CHECK(clauses == 1);
  // index helpers agree with the role table
  auto& r5 = lay.roles[lay.var_segment(2, 5)];
  CHECK(r5.kind == msts::SegmentRole::Kind::kVariable);
  CHECK(r5.var == 2);
  CHECK(r5.part == 5);
  auto& l6 = lay.roles[lay.lit_segment(2, 6)];
  CHECK(l6.kind == msts::SegmentRole::Kind::kLiteral);
  CHECK(l6.occ_pos == 2);
  CHECK(l6.part == 6);
  CHECK(lay.roles[lay.clause_segment(1)].clause == 1);

  // min variant: every horizontal grows by exactly 1/2 on each side
  auto minlay = msts::build_gadgets(f, ReductionVariant::kMinMsts);
  for (int i = 0; i < lay.instance.size(); ++i) {
    const auto& s = lay.instance.segments[i];
    const auto& e = minlay.instance.segments[i];
    bool horizontal = std::abs(s.a.x - s.b.x) > std::abs(s.a.y - s.b.y);
    double want = horizontal ? std::abs(s.a.x - s.b.x) + 1.0 : s.length();
    CHECK(std::abs(e.a.x - e.b.x) + std::abs(s.a.y - s.b.y) == doctest::Approx(want));
  }
  CHECK(msts::validate(minlay.instance).ok());
}

TEST_CASE("canonical trees cost the same for every assignment of the clause-free part") {
  auto f = formula(3, {{Literal{1, true}, Literal{2, true}},
                       {Literal{1, false}, Literal{3, true}}});
  auto lay = msts::build_gadgets(f);
  // strip clause segments, then every assignment parks at equal cost
  msts::Instance bare = lay.instance;
  bare.segments.erase(bare.segments.begin() + lay.clause_segment(1),
                      bare.segments.begin() + lay.clause_segment(2) + 1);
  double reference = -1;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<bool> assignment = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    auto choices = msts::canonical_choices(lay, assignment);
    choices.erase(choices.begin() + lay.clause_segment(1),
                  choices.begin() + lay.clause_segment(2) + 1);
    auto sol = msts::solution_from_choices(bare, choices);
    if (reference < 0) reference = sol.cost;
    CHECK(sol.cost == doctest::Approx(reference).epsilon(1e-12));
  }
  CHECK(reference == doctest::Approx(lay.baseline_cost).epsilon(1e-12));
}

TEST_CASE("canonical tree cost tracks the satisfied-clause count") {
  auto f = formula(2, {{Literal{1, true}, Literal{2, true}},
                       {Literal{1, false}, Literal{2, false}}});
  auto lay = msts::build_gadgets(f);
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<bool> assignment = {bool(mask & 1), bool(mask & 2)};
    int k = msts::satisfied_count(f, assignment);
    auto sol = msts::canonical_tree(lay, assignment);
    CHECK(sol.cost == doctest::Approx(lay.baseline_cost + (f.num_clauses() - k) * lay.eps)
                          .epsilon(1e-12));
  }
}

TEST_CASE("optimum equals baseline plus eps per missed clause") {
  auto f = formula(2, {{Literal{1, true}, Literal{2, false}}});
  auto lay = msts::build_gadgets(f);
  auto opt = msts::brute_force_msts(lay.instance);
  int ks = max_sat(f);
  CHECK(opt.cost == doctest::Approx(lay.baseline_cost + (1 - ks) * lay.eps).epsilon(1e-9));
  auto decoded = msts::decode_assignment(lay, opt);
  CHECK(msts::satisfied_count(f, decoded) == ks);
}

TEST_CASE("decode inverts canonical trees") {
  auto f = formula(3, {{Literal{1, true}, Literal{2, true}},
                       {Literal{2, false}, Literal{3, false}}});
  auto lay = msts::build_gadgets(f);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<bool> assignment = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    auto sol = msts::canonical_tree(lay, assignment);
    CHECK(msts::decode_assignment(lay, sol) == assignment);
  }
}

TEST_CASE("epsilon override validation") {
  auto f = formula(2, {{Literal{1, true}, Literal{2, true}}});
  CHECK_THROWS_WITH_AS(msts::build_gadgets(f, ReductionVariant::kMsts, 0.5),
                       "epsilon too large", std::invalid_argument);
  CHECK_THROWS_AS(msts::build_gadgets(f, ReductionVariant::kMsts, -1.0), std::invalid_argument);
  auto lay = msts::build_gadgets(f, ReductionVariant::kMsts, 1e-4);
  CHECK(lay.eps == doctest::Approx(1e-4));
}

TEST_CASE("role sidecar round trip") {
  auto f = formula(2, {{Literal{1, false}, Literal{2, true}}});
  auto lay = msts::build_gadgets(f);
  std::istringstream in(msts::serialize_roles(lay));
  auto roles = msts::parse_roles(in, lay.instance.size());
  REQUIRE(roles.size() == lay.roles.size());
  for (size_t i = 0; i < roles.size(); ++i) {
    CHECK(roles[i].kind == lay.roles[i].kind);
    CHECK(roles[i].var == lay.roles[i].var);
    CHECK(roles[i].part == lay.roles[i].part);
    CHECK(roles[i].occ_pos == lay.roles[i].occ_pos);
    CHECK(roles[i].occ_index == lay.roles[i].occ_index);
    CHECK(roles[i].clause == lay.roles[i].clause);
  }
}
