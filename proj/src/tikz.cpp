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

#include "cleva/error.hpp"
#include "cleva/render.hpp"
#include "cleva/version.hpp"
#include "render_util.hpp"

namespace cleva::render {
namespace {

using internal::Num;

constexpr std::array<std::string_view, kPaletteSize> kShellStyles = {
    "blueshell", "magentashell", "greenshell", "orangeshell", "cyanshell", "violetshell"};

std::string Polar(double deg, double radius_cm) {
  return "(" + Num(deg) + ":" + Num(radius_cm) + "cm)";
}

void Preamble(std::string& out, std::size_t bands) {
  out += "% CLEVA-Compass figure fragment, generated by cleva " + std::string(kToolVersion) + ".\n";
  out += "% Requires \\usepackage{tikz} and \\usetikzlibrary{decorations.text, arrows.meta}.\n";
  out += "% Include with \\input{...} inside a figure environment.\n";
  out += "\\begingroup\n";
  out += "\\def\\D{11}% inner axes\n";
  out += "\\def\\U{2}% marking circles\n";
  out += "\\def\\M{" + std::to_string(bands) + "}% bands per outer sector\n";
  out += "\\def\\EV{15}% outer sectors\n";
  out += "\\def\\R{2.7cm}% inner star radius\n";
  out += "\\def\\L{3.3cm}% outer ring radius\n";
  out += "\\def\\A{360/\\D}\n";
  out += "\\def\\B{360/\\EV}\n";
  out += "\\def\\Rot{3*\\A - 90}\n";
  out += "\\def\\LabelNear{35.5mm}\n";
  out += "\\def\\LabelFar{38mm}\n";
  out += "\\tikzset{\n";
  out += "  font={\\tiny\\selectfont},\n";
  for (std::size_t i = 0; i < Palette().size(); ++i) {
    const Color& c = Palette()[i];
    out += "  " + std::string(kShellStyles[i]) + "/.style={draw=" + std::string(c.tikz_draw) +
           ", fill=" + std::string(c.tikz_fill) + ", fill opacity=0.4, opacity=0.3},\n";
  }
  out += "}\n";
  out += "\\def\\clevaLegendItem#1#2#3#4#5{%\n";
  out += "  \\draw[fill=#3, fill opacity=0.3, draw=#4] (#1-0.4,#2-0.1) rectangle (#1-0.2,#2+0.1);\n";
  out += "  \\node[anchor=west] at (#1-0.1,#2) {#5};}\n";
}

void Grid(std::string& out) {
  out += "  % inner level: marking circles and axes\n";
  out += "  \\draw[black!40] (0,0) circle ({0.6*\\R});\n";
  out += "  \\draw[black!40] (0,0) circle (\\R);\n";
  out += "  \\foreach \\k in {0,...,10} {\\draw[black!40] (0,0) -- ({\\Rot + \\k*\\A}:\\R);}\n";
  for (std::size_t k = 0; k < Geometry::kAxes; ++k) {
    const double deg = Geometry::kRotationOffset + static_cast<double>(k) * Geometry::kAxisStep;
    out += "  \\node[align=center] at " + Polar(deg, Geometry::kAxisLabelRadius) + " {" +
           std::string(DisplayName(kInnerDimensions[k])) + "};\n";
  }
}

void OuterRing(std::string& out) {
  const double r_in = Geometry::kRingRadius - Geometry::kStripHalfWidth;
  const double r_out = Geometry::kRingRadius + Geometry::kStripHalfWidth;
  out += "  % outer level: one sector per measure\n";
  for (std::size_t s = 0; s < Geometry::kSectors; ++s) {
    const double start = Geometry::kRotationOffset + static_cast<double>(s) * Geometry::kSectorStep;
    const double end = start + Geometry::kSectorStep;
    out += "  \\draw[draw=white, fill=black!7] " + Polar(start, r_in) + " arc (" + Num(start) +
           ":" + Num(end) + ":" + Num(r_in) + "cm) -- " + Polar(end, r_out) + " arc (" + Num(end) +
           ":" + Num(start) + ":" + Num(r_out) + "cm) -- cycle;\n";
    out += "  \\path[decoration={text along path, text={" +
           std::string(DisplayName(kOuterMeasures[s])) +
           "}, text align={align=center}, raise=-0.3ex}, decorate] (" + Num(end) +
           ":\\LabelNear) arc (" + Num(end) + ":" + Num(start) + ":\\LabelNear);\n";
  }
}

void Entries(std::string& out, const RenderPlan& plan, const CompassDocument& doc) {
  const double r_in = Geometry::kRingRadius - Geometry::kStripHalfWidth;
  const double r_out = Geometry::kRingRadius + Geometry::kStripHalfWidth;
  for (const Polygon& p : plan.polygons) {
    const CompassEntry& entry = doc.entries[p.entry];
    const std::string style(kShellStyles[static_cast<std::size_t>(entry.color_slot)]);
    out += "  % entry " + std::to_string(p.entry) + "\n";
    out += "  \\draw[" + style + "]";
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
      out += (k == 0 ? " " : " -- ") + Polar(plan.axis_angles[k], p.radii[k]);
    }
    out += " -- cycle;\n";
    for (const Tick& t : plan.ticks) {
      if (t.entry != p.entry) continue;
      out += "  \\draw[" + style + "] " + Polar(t.start_deg, r_in) + " arc (" +
             Num(t.start_deg) + ":" + Num(t.end_deg) + ":" + Num(r_in) + "cm) -- " +
             Polar(t.end_deg, r_out) + " arc (" + Num(t.end_deg) + ":" + Num(t.start_deg) +
             ":" + Num(r_out) + "cm) -- cycle; % " + std::string(Key(t.measure)) + "\n";
    }
  }
}

void LegendPicture(std::string& out, const RenderPlan& plan) {
  if (plan.legend.empty()) return;
  const std::size_t rows = (plan.legend.size() + 2) / 3;
  out += "\\par\\medskip\n";
  out += "\\begin{tikzpicture}\n";
  out += "  \\draw[draw=black!05] (-0.5," + Num(-0.4 * static_cast<double>(rows)) +
         ") rectangle ++(9.3," + Num(0.4 * static_cast<double>(rows)) + ");\n";
  for (std::size_t k = 0; k < plan.legend.size(); ++k) {
    const LegendItem& item = plan.legend[k];
    const double x = 3.1 * static_cast<double>(k % 3);
    const double y = -0.2 - 0.4 * static_cast<double>(k / 3);
    out += "  \\clevaLegendItem{" + Num(x) + "}{" + Num(y) + "}{" +
           std::string(item.color.tikz_fill) + "}{" + std::string(item.color.tikz_draw) + "}{" +
           EscapeLatex(item.label) + "}\n";
  }
  out += "\\end{tikzpicture}\n";
}

}  // namespace

std::string EscapeLatex(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 8);
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u == 0x7F) {
      throw Error(ErrorCode::kEscape, "label contains a control character with no LaTeX escape",
                  "label");
    }
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '$': out += "\\$"; break;
      case '#': out += "\\#"; break;
      case '_': out += "\\_"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string RenderTikz(const CompassDocument& doc) {
  const RenderPlan plan = Layout(doc);

  std::string out;
  out.reserve(16 * 1024);
  Preamble(out, plan.bands_per_sector);
  out += "\\begin{tikzpicture}\n";
  OuterRing(out);
  Grid(out);
  Entries(out, plan, doc);
  out += "\\end{tikzpicture}\n";
  LegendPicture(out, plan);
  out += "\\endgroup\n";
  return out;
}

}  // namespace cleva::render
