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

#include <algorithm>

#include "cleva/error.hpp"
#include "cleva/render.hpp"

namespace cleva::render {
namespace {

// Slots 0-4 match the legend order of the bundled methods; slot 5 is violet.
constexpr std::array<Color, kPaletteSize> kPalette = {{
    {"deep blue", "#0000B3", "#0000B3", "blue!70!black", "blue!70!black"},
    {"magenta", "#FF00FF", "#FF00FF", "magenta", "magenta"},
    {"dark green", "#008000", "#008000", "green!50!black", "green!50!black"},
    {"orange", "#FF9933", "#E67300", "orange!80", "orange!90!black"},
    {"dark cyan", "#00CCCC", "#00E6E6", "cyan!80!black", "cyan!90!black"},
    {"violet", "#993399", "#730073", "violet!80", "violet!90!black"},
}};

}  // namespace

double MarkRadius(SupervisionMark mark) {
  switch (mark) {
    case SupervisionMark::kNone: return 0.0;
    case SupervisionMark::kSupervised: return Geometry::kSupervisedRadius;
    case SupervisionMark::kUnsupervised: return Geometry::kUnsupervisedRadius;
  }
  return 0.0;
}

const std::array<Color, kPaletteSize>& Palette() { return kPalette; }

const Color& PaletteColor(int slot) {
  if (slot < 0 || slot >= kPaletteSize) {
    throw Error(ErrorCode::kSchema, "color slot out of range", "color_slot");
  }
  return kPalette[static_cast<std::size_t>(slot)];
}

std::vector<Color> AssignPalette(const CompassDocument& doc) {
  std::vector<Color> out;
  out.reserve(doc.entries.size());
  for (const auto& e : doc.entries) out.push_back(PaletteColor(e.color_slot));
  return out;
}

RenderPlan Layout(const CompassDocument& doc) {
  ValidationReport report = ValidateDocument(doc);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kSchema, v.path + ": " + v.message, v.path);
  }

  RenderPlan plan;
  for (std::size_t k = 0; k < Geometry::kAxes; ++k) {
    plan.axis_angles[k] = Geometry::kRotationOffset + static_cast<double>(k) * Geometry::kAxisStep;
  }
  for (std::size_t s = 0; s < Geometry::kSectors; ++s) {
    plan.sectors[s] = {kOuterMeasures[s],
                       Geometry::kRotationOffset + static_cast<double>(s) * Geometry::kSectorStep,
                       Geometry::kRotationOffset + static_cast<double>(s + 1) * Geometry::kSectorStep};
  }
  plan.bands_per_sector = std::max(Geometry::kMinBandsPerSector, doc.entries.size());
  plan.palette = kPalette;

  const double band_step = Geometry::kSectorStep / static_cast<double>(plan.bands_per_sector);
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    const CompassEntry& entry = doc.entries[i];
    Polygon polygon{i, {}};
    for (std::size_t k = 0; k < Geometry::kAxes; ++k) polygon.radii[k] = MarkRadius(entry.inner[k]);
    plan.polygons.push_back(polygon);

    for (const Sector& sector : plan.sectors) {
      if (!entry.reports(sector.measure)) continue;
      const double start = sector.start_deg + static_cast<double>(i) * band_step;
      plan.ticks.push_back({i, sector.measure, i, start, start + band_step});
    }
    plan.legend.push_back({entry.label, entry.color_slot, PaletteColor(entry.color_slot)});
  }
  return plan;
}

std::vector<std::string> WrapLabel(std::string_view label, std::size_t width) {
  if (Utf8Length(label) <= width) return {std::string(label)};
  // Last space that keeps the first line within `width` code points.
  std::size_t split = std::string_view::npos;
  std::size_t points = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const auto c = static_cast<unsigned char>(label[i]);
    if ((c & 0xC0) == 0x80) continue;
    if (points > width) break;
    if (label[i] == ' ' && points > 0) split = i;
    ++points;
  }
  if (split == std::string_view::npos) {
    // No usable space: hard break after `width` code points.
    std::size_t i = 0;
    for (std::size_t n = 0; i < label.size(); ++i) {
      const auto c = static_cast<unsigned char>(label[i]);
      if ((c & 0xC0) != 0x80 && n++ == width) break;
    }
    return {std::string(label.substr(0, i)), std::string(label.substr(i))};
  }
  return {std::string(label.substr(0, split)), std::string(label.substr(split + 1))};
}

}  // namespace cleva::render
