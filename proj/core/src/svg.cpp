#include "msts/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace msts {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const RenderOptions& opts) {
  if (inst.segments.empty()) throw std::invalid_argument("nothing to render");
  if (opts.solution != nullptr &&
      static_cast<int>(opts.solution->choices.size()) != inst.size()) {
    throw std::invalid_argument("solution does not match instance");
  }
  if (opts.roles != nullptr &&
      static_cast<int>(opts.roles->size()) != inst.size()) {
    throw std::invalid_argument("roles do not match instance");
  }

  double min_x = inst.segments[0].a.x, max_x = min_x;
  double min_y = inst.segments[0].a.y, max_y = min_y;
  for (const auto& s : inst.segments) {
    for (const Point& p : {s.a, s.b}) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  min_x -= opts.margin;
  max_x += opts.margin;
  min_y -= opts.margin;
  max_y += opts.margin;

  const double world_w = max_x - min_x;
  const double world_h = max_y - min_y;
  const double scale = opts.target_width / world_w;
  const double pix_h = world_h * scale;

  auto px = [&](double x) { return (x - min_x) * scale; };
  // SVG y grows downward; flip so world y grows upward.
  auto py = [&](double y) { return (max_y - y) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(opts.target_width) + "\" height=\"" + num(pix_h) +
         "\" viewBox=\"0 0 " + num(opts.target_width) + " " + num(pix_h) + "\">\n";
  out += "<style>\n"
         ".seg { stroke: #1f3f77; stroke-width: 2; stroke-linecap: round; }\n"
         ".seg.clause { stroke: #b03030; }\n"
         ".edge { stroke: #3fa04f; stroke-width: 1; stroke-dasharray: 4 3; }\n"
         ".pick { fill: #1f3f77; }\n"
         "</style>\n";

  if (opts.solution != nullptr) {
    const auto& tree = opts.solution->tree;
    for (const auto& [u, v] : tree.edges) {
      const Point& p = tree.nodes[static_cast<size_t>(u)];
      const Point& q = tree.nodes[static_cast<size_t>(v)];
      out += "<line class=\"edge\" x1=\"" + num(px(p.x)) + "\" y1=\"" + num(py(p.y)) +
             "\" x2=\"" + num(px(q.x)) + "\" y2=\"" + num(py(q.y)) + "\"/>\n";
    }
  }

  for (int i = 0; i < inst.size(); ++i) {
    const auto& s = inst.segments[static_cast<size_t>(i)];
    const bool clause = opts.roles != nullptr &&
                        (*opts.roles)[static_cast<size_t>(i)].kind ==
                            SegmentRole::Kind::kClause;
    out += std::string("<line class=\"seg") + (clause ? " clause" : "") +
           "\" x1=\"" + num(px(s.a.x)) + "\" y1=\"" + num(py(s.a.y)) +
           "\" x2=\"" + num(px(s.b.x)) + "\" y2=\"" + num(py(s.b.y)) + "\"/>\n";
  }

  if (opts.solution != nullptr) {
    for (int i = 0; i < inst.size(); ++i) {
      const Point& p = opts.solution->tree.nodes[static_cast<size_t>(i)];
      out += "<circle class=\"pick\" cx=\"" + num(px(p.x)) + "\" cy=\"" +
             num(py(p.y)) + "\" r=\"3\"/>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace msts
