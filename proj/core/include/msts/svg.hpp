#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msts/instance.hpp"
#include "msts/reduction.hpp"

namespace msts {

struct RenderOptions {
  double margin = 1.0;          // world units added around the bounding box
  double target_width = 800.0;  // pixel width; height follows the aspect ratio
  // Styling hooks; roles mark clause segments with an extra CSS class.
  const ChoiceSolution* solution = nullptr;
  const std::vector<SegmentRole>* roles = nullptr;
};

// Deterministic standalone SVG. Segments become <line class="seg"> (clause
// segments: "seg clause"), tree edges <line class="edge">, chosen endpoints
// <circle class="pick">. World y points up; the SVG is flipped accordingly.
std::string render_svg(const Instance& inst, const RenderOptions& opts = {});

}  // namespace msts
