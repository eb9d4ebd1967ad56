#include "rhombforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace rhombforge {

namespace {

std::string fmt(double v) {
  if (std::fabs(v) < 1e-12) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string hsl_hex(double hue, double sat, double light) {
  const double c = (1.0 - std::fabs(2.0 * light - 1.0)) * sat;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = light - c / 2.0;
  char buf[8];
  auto chan = [&](double v) { return static_cast<int>(std::lround(255.0 * (v + m))); };
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", chan(r), chan(g), chan(b));
  return buf;
}

struct Bounds {
  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool empty = true;
  void add(double x, double y) {
    if (empty) {
      minx = maxx = x;
      miny = maxy = y;
      empty = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
};

}  // namespace

std::string default_fill(int type, unsigned n) {
  return hsl_hex(360.0 * type / static_cast<double>(n + 1), 0.62, 0.72);
}

RenderStyle RenderStyle::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RenderStyle s;
  if (j.contains("palette"))
    for (const auto& [key, value] : j.at("palette").items())
      s.palette[std::stoi(key)] = value.get<std::string>();
  if (j.contains("negative_fill")) s.negative_fill = j.at("negative_fill").get<std::string>();
  if (j.contains("background")) s.background = j.at("background").get<std::string>();
  if (j.contains("stroke")) s.stroke = j.at("stroke").get<std::string>();
  if (j.contains("stroke_width")) s.stroke_width = j.at("stroke_width").get<double>();
  if (j.contains("scale")) s.scale = j.at("scale").get<double>();
  if (j.contains("draw_boundary")) s.draw_boundary = j.at("draw_boundary").get<bool>();
  if (j.contains("boundary_stroke")) s.boundary_stroke = j.at("boundary_stroke").get<std::string>();
  return s;
}

std::string render_patch(const Patch& patch, const RenderStyle& style) {
  if (patch.tiles.empty()) throw std::invalid_argument("render_patch: empty patch");

  // Y axis points up: flip y when mapping to SVG pixel coordinates.
  Bounds box;
  for (const auto& t : patch.tiles)
    for (const auto& c : t.fcorners) box.add(style.scale * c[0], -style.scale * c[1]);
  std::vector<std::array<double, 2>> bpts;
  if (style.draw_boundary) {
    for (const auto& p : patch.boundary_polyline()) {
      bpts.push_back({style.scale * p.x(), -style.scale * p.y()});
      box.add(bpts.back()[0], bpts.back()[1]);
    }
  }
  const double margin = style.stroke_width + 2.0;
  const double w = box.maxx - box.minx + 2 * margin;
  const double h = box.maxy - box.miny + 2 * margin;
  const double ox = box.minx - margin;
  const double oy = box.miny - margin;

  bool has_negative = false;
  for (const auto& t : patch.tiles)
    if (t.sign < 0) has_negative = true;
  std::string background =
      style.background ? *style.background : (has_negative ? "#d9d9d9" : "none");

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(ox) + " " +
         fmt(oy) + " " + fmt(w) + " " + fmt(h) + "\">\n";
  if (background != "none")
    svg += "  <rect x=\"" + fmt(ox) + "\" y=\"" + fmt(oy) + "\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" fill=\"" + background + "\"/>\n";
  svg += "  <g stroke=\"" + style.stroke + "\" stroke-width=\"" + fmt(style.stroke_width) +
         "\" stroke-linejoin=\"round\">\n";

  auto polygon = [&](const SignedTile& t, const std::string& fill) {
    svg += "    <polygon fill=\"" + fill + "\" points=\"";
    for (int k = 0; k < 4; ++k) {
      if (k) svg += " ";
      svg += fmt(style.scale * t.fcorners[k][0]) + "," + fmt(-style.scale * t.fcorners[k][1]);
    }
    svg += "\"/>\n";
  };

  for (const auto& t : patch.tiles) {
    if (t.sign < 0) continue;
    auto it = style.palette.find(t.type);
    polygon(t, it != style.palette.end() ? it->second : default_fill(t.type, patch.n));
  }
  for (const auto& t : patch.tiles) {
    if (t.sign >= 0) continue;
    polygon(t, style.negative_fill);
  }
  svg += "  </g>\n";

  if (style.draw_boundary) {
    svg += "  <polyline fill=\"none\" stroke=\"" + style.boundary_stroke + "\" stroke-width=\"" +
           fmt(style.stroke_width) + "\" points=\"";
    for (size_t i = 0; i <= bpts.size(); ++i) {
      const auto& p = bpts[i % bpts.size()];
      if (i) svg += " ";
      svg += fmt(p[0]) + "," + fmt(p[1]);
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_edge(const EdgeSequence& e, const RenderStyle& style) {
  const auto pts = edge_polyline(e, 0);
  Bounds box;
  std::vector<std::array<double, 2>> fp;
  fp.reserve(pts.size());
  for (const auto& p : pts) {
    fp.push_back({style.scale * p.x(), -style.scale * p.y()});
    box.add(fp.back()[0], fp.back()[1]);
  }
  const double margin = style.stroke_width + 2.0;
  const double w = box.maxx - box.minx + 2 * margin;
  const double h = box.maxy - box.miny + 2 * margin;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         fmt(box.minx - margin) + " " + fmt(box.miny - margin) + " " + fmt(w) + " " + fmt(h) +
         "\">\n";
  svg += "  <polyline fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"" +
         fmt(style.stroke_width) + "\" stroke-linejoin=\"round\" points=\"";
  for (size_t i = 0; i < fp.size(); ++i) {
    if (i) svg += " ";
    svg += fmt(fp[i][0]) + "," + fmt(fp[i][1]);
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace rhombforge
