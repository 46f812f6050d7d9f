// Copyright 2026 The cleva-compass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "cleva/render.hpp"
#include "cleva/version.hpp"
#include "render_util.hpp"

namespace cleva::render {
namespace {

using internal::Num;
using internal::Radians;

constexpr double kCanvas = 800.0;
constexpr double kCenter = kCanvas / 2.0;
constexpr double kScale = 100.0;  // SVG units per geometry unit

struct Point {
  double x;
  double y;
};

Point Polar(double deg, double radius) {
  const double a = Radians(deg);
  return {kCenter + kScale * radius * std::cos(a), kCenter - kScale * radius * std::sin(a)};
}

std::string Pt(Point p) { return Num(p.x) + "," + Num(p.y); }

std::string EscapeXml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Annular sector between two radii, counter-clockwise from start to end.
std::string AnnularPath(double start, double end, double r_in, double r_out) {
  const std::string large = (end - start) > 180.0 ? "1" : "0";
  const std::string ro = Num(kScale * r_out);
  const std::string ri = Num(kScale * r_in);
  std::string d = "M " + Pt(Polar(start, r_out));
  d += " A " + ro + " " + ro + " 0 " + large + " 0 " + Pt(Polar(end, r_out));
  d += " L " + Pt(Polar(end, r_in));
  d += " A " + ri + " " + ri + " 0 " + large + " 1 " + Pt(Polar(start, r_in));
  d += " Z";
  return d;
}

// Tangential text rotation, flipped on the lower half so text stays upright.
double TextRotation(double deg, bool* flipped) {
  double rot = 90.0 - deg;
  while (rot > 180.0) rot -= 360.0;
  while (rot <= -180.0) rot += 360.0;
  *flipped = rot > 90.0 || rot < -90.0;
  if (*flipped) rot += (rot > 0.0 ? -180.0 : 180.0);
  return rot;
}

void RadialText(std::string& out, const char* cls, double deg, double radius,
                std::string_view text, int font_size) {
  bool flipped = false;
  const double rot = TextRotation(deg, &flipped);
  const Point p = Polar(deg, radius);
  out += "    <text class=\"" + std::string(cls) + "\" x=\"" + Num(p.x) + "\" y=\"" + Num(p.y) +
         "\" font-size=\"" + std::to_string(font_size) +
         "\" text-anchor=\"middle\" dominant-baseline=\"middle\" transform=\"rotate(" +
         Num(rot) + " " + Num(p.x) + " " + Num(p.y) + ")\">" + EscapeXml(text) + "</text>\n";
}

// Multi-word measure names use both label radii; reading order follows the
// text orientation.
void SectorLabel(std::string& out, double deg, std::string_view name) {
  const auto space = name.find(' ');
  if (space == std::string_view::npos) {
    RadialText(out, "sector-label", deg, Geometry::kLabelRadiusNear, name, 11);
    return;
  }
  bool flipped = false;
  TextRotation(deg, &flipped);
  const std::string_view first = name.substr(0, space);
  const std::string_view second = name.substr(space + 1);
  const double r_first = flipped ? Geometry::kLabelRadiusNear : Geometry::kLabelRadiusFar;
  const double r_second = flipped ? Geometry::kLabelRadiusFar : Geometry::kLabelRadiusNear;
  RadialText(out, "sector-label", deg, r_first, first, 11);
  RadialText(out, "sector-label", deg, r_second, second, 11);
}

void Legend(std::string& out, const RenderPlan& plan) {
  out += "  <g id=\"legend\">\n";
  for (std::size_t k = 0; k < plan.legend.size(); ++k) {
    const LegendItem& item = plan.legend[k];
    const std::size_t corner = k / 2;  // top-left, top-right, bottom-left
    const std::size_t row = k % 2;
    const bool right = corner == 1;
    const double y = corner == 2 ? kCanvas - 80.0 + 34.0 * static_cast<double>(row)
                                 : 12.0 + 34.0 * static_cast<double>(row);
    const double rect_x = right ? kCanvas - 24.0 : 12.0;
    const double text_x = right ? rect_x - 6.0 : rect_x + 18.0;
    const char* anchor = right ? "end" : "start";

    out += "    <g class=\"legend-item\" data-slot=\"" + std::to_string(item.color_slot) + "\">\n";
    out += "      <rect x=\"" + Num(rect_x) + "\" y=\"" + Num(y) +
           "\" width=\"12.0000\" height=\"12.0000\" fill=\"" + std::string(item.color.fill_hex) +
           "\" fill-opacity=\"0.3000\" stroke=\"" + std::string(item.color.stroke_hex) + "\"/>\n";
    const auto lines = WrapLabel(item.label);
    for (std::size_t l = 0; l < lines.size(); ++l) {
      out += "      <text x=\"" + Num(text_x) + "\" y=\"" +
             Num(y + 10.0 + 13.0 * static_cast<double>(l)) +
             "\" font-size=\"11\" text-anchor=\"" + anchor + "\">" + EscapeXml(lines[l]) +
             "</text>\n";
    }
    out += "    </g>\n";
  }
  out += "  </g>\n";
}

}  // namespace

std::string RenderSvg(const RenderPlan& plan) {
  std::string out;
  out.reserve(32 * 1024);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\" font-family=\"sans-serif\">\n";
  out += "  <!-- cleva " + std::string(kToolVersion) + " -->\n";
  out += "  <rect width=\"800\" height=\"800\" fill=\"#FFFFFF\"/>\n";

  // Outer ring: one background sector per measure, then the filled bands.
  const double r_in = Geometry::kRingRadius - Geometry::kStripHalfWidth;
  const double r_out = Geometry::kRingRadius + Geometry::kStripHalfWidth;
  out += "  <g id=\"outer\">\n";
  for (const Sector& s : plan.sectors) {
    out += "    <path class=\"sector\" data-measure=\"" + std::string(Key(s.measure)) +
           "\" d=\"" + AnnularPath(s.start_deg, s.end_deg, r_in, r_out) +
           "\" fill=\"#EEEEEE\" stroke=\"#FFFFFF\" stroke-width=\"1.0000\"/>\n";
  }
  for (const Sector& s : plan.sectors) {
    SectorLabel(out, (s.start_deg + s.end_deg) / 2.0, DisplayName(s.measure));
  }
  out += "  </g>\n";

  out += "  <g id=\"bands\">\n";
  for (const Tick& t : plan.ticks) {
    const Color& c = plan.legend[t.entry].color;
    out += "    <path class=\"band\" data-entry=\"" + std::to_string(t.entry) +
           "\" data-measure=\"" + std::string(Key(t.measure)) + "\" d=\"" +
           AnnularPath(t.start_deg, t.end_deg, r_in, r_out) + "\" fill=\"" +
           std::string(c.fill_hex) + "\" fill-opacity=\"0.4000\" stroke=\"" +
           std::string(c.stroke_hex) + "\" stroke-opacity=\"0.3000\"/>\n";
  }
  out += "  </g>\n";

  // Inner star plot: marking circles, axes, axis labels.
  out += "  <g id=\"grid\">\n";
  for (double r : {Geometry::kSupervisedRadius, Geometry::kUnsupervisedRadius}) {
    out += "    <circle class=\"marking-circle\" cx=\"" + Num(kCenter) + "\" cy=\"" +
           Num(kCenter) + "\" r=\"" + Num(kScale * r) +
           "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1.0000\"/>\n";
  }
  for (std::size_t k = 0; k < plan.axis_angles.size(); ++k) {
    const Point end = Polar(plan.axis_angles[k], Geometry::kInnerRadius);
    out += "    <line class=\"axis\" data-dimension=\"" +
           std::string(Key(kInnerDimensions[k])) + "\" x1=\"" + Num(kCenter) + "\" y1=\"" +
           Num(kCenter) + "\" x2=\"" + Num(end.x) + "\" y2=\"" + Num(end.y) +
           "\" stroke=\"#666666\" stroke-width=\"1.0000\"/>\n";
  }
  for (std::size_t k = 0; k < plan.axis_angles.size(); ++k) {
    RadialText(out, "axis-label", plan.axis_angles[k], Geometry::kAxisLabelRadius,
               DisplayName(kInnerDimensions[k]), 10);
  }
  out += "  </g>\n";

  out += "  <g id=\"entries\">\n";
  for (const Polygon& p : plan.polygons) {
    const Color& c = plan.legend[p.entry].color;
    std::string points;
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
      if (k > 0) points += ' ';
      points += Pt(Polar(plan.axis_angles[k], p.radii[k]));
    }
    out += "    <polygon class=\"entry\" data-entry=\"" + std::to_string(p.entry) +
           "\" points=\"" + points + "\" fill=\"" + std::string(c.fill_hex) +
           "\" fill-opacity=\"0.4000\" stroke=\"" + std::string(c.stroke_hex) +
           "\" stroke-opacity=\"0.3000\" stroke-width=\"2.0000\"/>\n";
  }
  out += "  </g>\n";

  Legend(out, plan);
  out += "</svg>\n";
  return out;
}

}  // namespace cleva::render
