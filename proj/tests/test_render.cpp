#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "rhombforge/render.hpp"

using namespace rhombforge;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("single tile renders as one polygon with four vertices") {
  const Patch p = prototile_patch(5, 2);
  const std::string svg = render_patch(p);
  CHECK(count_occurrences(svg, "<polygon") == 1);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const size_t start = svg.find("points=\"");
  const size_t end = svg.find('"', start + 8);
  const std::string pts = svg.substr(start + 8, end - start - 8);
  CHECK(std::count(pts.begin(), pts.end(), ',') == 4);
}

TEST_CASE("negative parts paint white over a gray background") {
  const EdgeSequence e = EdgeSequence::validate(9, {2, -2});
  const Patch p = build_substitution_tile(e, 9);
  const std::string svg = render_patch(p);
  CHECK(count_occurrences(svg, "fill=\"#ffffff\"") == 1);
  CHECK(svg.find("#d9d9d9") != std::string::npos);
  // negatives come after positives in paint order
  CHECK(svg.rfind("fill=\"#ffffff\"") > svg.rfind("fill=\"#d9"));
}

TEST_CASE("all-positive patches get no gray backdrop") {
  const EdgeSequence e = EdgeSequence::validate(9, {2, -2});
  const std::string svg = render_patch(build_substitution_tile(e, 4));
  CHECK(svg.find("#d9d9d9") == std::string::npos);
  CHECK(count_occurrences(svg, "<polygon") == 4);
}

TEST_CASE("three generations of the doubling rule yield 64 polygons") {
  const EdgeSequence e = EdgeSequence::validate(5, {2, -2});
  Patch p = prototile_patch(5, 2);
  for (int g = 0; g < 3; ++g) p = substitute(p, e, Variant::b);
  const std::string svg = render_patch(p);
  CHECK(count_occurrences(svg, "<polygon") == 64);
}

TEST_CASE("rendering is deterministic") {
  const EdgeSequence e = EdgeSequence::validate(5, {1, -1});
  Patch p = prototile_patch(5, 2);
  for (int g = 0; g < 2; ++g) p = substitute(p, e, Variant::c);
  CHECK(render_patch(p) == render_patch(p));
  CHECK(render_edge(expand_edge(e, 4, Variant::b)) ==
        render_edge(expand_edge(e, 4, Variant::b)));
}

TEST_CASE("edge rendering has one vertex per break") {
  const EdgeSequence e = EdgeSequence::validate(5, {2, -2});
  for (unsigned g : {0u, 1u, 3u}) {
    const EdgeSequence exp = expand_edge(e, g, Variant::b);
    const std::string svg = render_edge(exp);
    const size_t start = svg.find("points=\"");
    const size_t end = svg.find('"', start + 8);
    const std::string pts = svg.substr(start + 8, end - start - 8);
    CHECK(static_cast<size_t>(std::count(pts.begin(), pts.end(), ',')) == exp.size() + 1);
  }
}

TEST_CASE("style sidecar controls fills and boundary overlay") {
  const RenderStyle style = RenderStyle::from_json(
      R"({"palette": {"2": "#112233"}, "scale": 40.0, "draw_boundary": true,
          "background": "#fafafa", "stroke_width": 0.5})");
  CHECK(style.scale == 40.0);
  const EdgeSequence e = EdgeSequence::validate(5, {2, -2});
  const std::string svg = render_patch(build_substitution_tile(e, 2), style);
  CHECK(svg.find("#112233") != std::string::npos);
  CHECK(svg.find("#fafafa") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("default palette separates congruent tile indices") {
  for (unsigned n : {5u, 9u}) {
    for (int s = 0; s <= static_cast<int>(n) / 2; ++s)
      CHECK(default_fill(s, n) != default_fill(static_cast<int>(n) - s, n));
  }
}

TEST_CASE("float coordinates agree with exact anchors within tolerance") {
  const EdgeSequence e = EdgeSequence::validate(9, {2, -2});
  const Patch p = build_substitution_tile(e, 4);
  for (const auto& t : p.tiles) {
    const auto corners = t.corners(p.n);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::fabs(corners[k].x() - t.fcorners[k][0]) < 1e-9);
      CHECK(std::fabs(corners[k].y() - t.fcorners[k][1]) < 1e-9);
    }
  }
}
