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

#ifndef CLEVA_RENDER_HPP_
#define CLEVA_RENDER_HPP_

// Compass rendering. Layout() resolves a document into a RenderPlan; the SVG
// and TikZ emitters are pure functions of their input.
//
// Angles are in degrees, counter-clockwise from the positive x axis (TikZ
// convention). Lengths are in geometry units (1 unit = 1 cm in TikZ,
// 100 px in SVG).

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cleva/descriptor.hpp"

namespace cleva::render {

struct Geometry {
  static constexpr std::size_t kAxes = kInnerDimensionCount;     // D
  static constexpr std::size_t kSectors = kOuterMeasureCount;    // EV
  static constexpr std::size_t kMinBandsPerSector = 5;           // M

  static constexpr double kInnerRadius = 2.7;     // R
  static constexpr double kRingRadius = 3.3;      // L
  static constexpr double kStripHalfWidth = 0.125;
  static constexpr double kLabelRadiusNear = 3.55;
  static constexpr double kLabelRadiusFar = 3.8;
  static constexpr double kAxisLabelRadius = 2.95;

  static constexpr double kAxisStep = 360.0 / kAxes;      // A
  static constexpr double kSectorStep = 360.0 / kSectors; // B
  static constexpr double kRotationOffset = 3.0 * kAxisStep - 90.0;

  // Marking circles; "none" sits at the center.
  static constexpr double kSupervisedRadius = 0.6 * kInnerRadius;
  static constexpr double kUnsupervisedRadius = 1.0 * kInnerRadius;
};

double MarkRadius(SupervisionMark mark);

struct Color {
  std::string_view name;
  std::string_view fill_hex;    // SVG fill
  std::string_view stroke_hex;  // SVG stroke
  std::string_view tikz_fill;   // xcolor expression
  std::string_view tikz_draw;

  friend bool operator==(const Color&, const Color&) = default;
};

// Six fixed colors; slot i is the i-th palette color.
const std::array<Color, kPaletteSize>& Palette();
const Color& PaletteColor(int slot);

// Entry colors in document order.
std::vector<Color> AssignPalette(const CompassDocument& doc);

struct Sector {
  OuterMeasure measure;
  double start_deg;
  double end_deg;
};

struct Polygon {
  std::size_t entry;
  std::array<double, Geometry::kAxes> radii;
};

// One filled band: entry `entry` reports `measure`.
struct Tick {
  std::size_t entry;
  OuterMeasure measure;
  std::size_t band;
  double start_deg;
  double end_deg;
};

struct LegendItem {
  std::string label;
  int color_slot;
  Color color;
};

struct RenderPlan {
  std::array<double, Geometry::kAxes> axis_angles{};
  std::array<Sector, Geometry::kSectors> sectors{};
  std::size_t bands_per_sector = Geometry::kMinBandsPerSector;
  std::vector<Polygon> polygons;
  std::vector<Tick> ticks;
  std::array<Color, kPaletteSize> palette{};
  std::vector<LegendItem> legend;
};

// Throws Error(kSchema) if the document is invalid.
RenderPlan Layout(const CompassDocument& doc);

// Splits at word boundaries into at most two lines when longer than `width`.
std::vector<std::string> WrapLabel(std::string_view label, std::size_t width = 24);

// Standalone SVG, 800x800, origin at the center.
std::string RenderSvg(const RenderPlan& plan);

// Escapes LaTeX specials. Throws Error(kEscape) on control characters.
std::string EscapeLatex(std::string_view text);

// Self-contained TikZ fragment for \input.
std::string RenderTikz(const CompassDocument& doc);

}  // namespace cleva::render

#endif  // CLEVA_RENDER_HPP_
