#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trochoid/trace.hpp"

namespace trochoid {

struct RenderStyle {
  double stroke_width = 1.5;  // px
  std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                      "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double margin = 20.0;  // px
  bool flip_y = true;    // SVG y grows downward
  double size = 800.0;   // px along the longer side of the drawing
};

// One <path> per trace (M/L segments, Z when closed) inside a single <g>,
// colors cycling through the palette. Throws std::invalid_argument on an
// empty list, mixed frames, an empty trace or an invalid style.
std::string to_svg(std::span<const Trace> traces, const RenderStyle& style = {});

// "t,x,y" header then one shortest-round-trip decimal row per sample.
std::string to_csv(const Trace& trace);

std::vector<Sample> parse_csv(std::string_view text);

}  // namespace trochoid
