#pragma once

#include <map>
#include <optional>
#include <string>

#include "rhombforge/geometry.hpp"

namespace rhombforge {

/// Visual conventions: tiles colored by folded index, negative tiles painted
/// last in a flat fill so they subtract visually from whatever lies below.
struct RenderStyle {
  std::map<int, std::string> palette;          // folded type -> "#rrggbb"; filled on demand
  std::string negative_fill = "#ffffff";
  std::optional<std::string> background;       // defaults to gray when negatives exist
  std::string stroke = "#333333";
  double stroke_width = 1.0;
  double scale = 100.0;                        // pixels per unit edge
  bool draw_boundary = false;
  std::string boundary_stroke = "#c02020";

  static RenderStyle from_json(const std::string& text);
};

std::string default_fill(int type, unsigned n);

std::string render_patch(const Patch& patch, const RenderStyle& style = RenderStyle{});

std::string render_edge(const EdgeSequence& e, const RenderStyle& style = RenderStyle{});

}  // namespace rhombforge
