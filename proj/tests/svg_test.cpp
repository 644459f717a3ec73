#include <sstream>

#include "doctest.h"
#include "msts/exact.hpp"
#include "msts/instance.hpp"
#include "msts/svg.hpp"

using msts::Instance;

TEST_CASE("svg output is deterministic and well formed") {
  Instance inst;
  inst.segments = {{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}};
  auto a = msts::render_svg(inst);
  auto b = msts::render_svg(inst);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("class=\"seg\"") != std::string::npos);
  CHECK(a.find("class=\"edge\"") == std::string::npos);  // no solution given
}

TEST_CASE("svg marks solutions and clause segments") {
  auto layout = [] {
    msts::Cnf2Formula f;
    f.num_vars = 2;
    f.clauses.push_back({msts::Literal{1, true}, msts::Literal{2, true}});
    return msts::build_gadgets(f);
  }();
  auto sol = msts::canonical_tree(layout, {true, true});
  msts::RenderOptions opts;
  opts.solution = &sol;
  opts.roles = &layout.roles;
  auto svg = msts::render_svg(layout.instance, opts);
  CHECK(svg.find("class=\"seg clause\"") != std::string::npos);
  CHECK(svg.find("class=\"edge\"") != std::string::npos);
  CHECK(svg.find("class=\"pick\"") != std::string::npos);
}
