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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cleva/bundled.hpp"
#include "cleva/error.hpp"
#include "cleva/render.hpp"
#include "support/random_docs.hpp"
#include "support/svg_scan.hpp"
#include "support/tex_labels.hpp"

namespace cleva::render {
namespace {

using testing_support::Count;

std::vector<double> Numbers(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ' ')) {
    const auto comma = token.find(',');
    out.push_back(std::stod(token.substr(0, comma)));
    out.push_back(std::stod(token.substr(comma + 1)));
  }
  return out;
}

TEST(Layout, AxisAnglesEquallySpaced) {
  const RenderPlan plan = Layout(BundledDocument());
  for (std::size_t k = 1; k < plan.axis_angles.size(); ++k) {
    EXPECT_NEAR(plan.axis_angles[k] - plan.axis_angles[k - 1], 360.0 / 11.0, 1e-9);
  }
  EXPECT_NEAR(plan.axis_angles.front() + 360.0 - plan.axis_angles.back(), 360.0 / 11.0, 1e-9);
  for (std::size_t s = 0; s < plan.sectors.size(); ++s) {
    EXPECT_NEAR(plan.sectors[s].end_deg - plan.sectors[s].start_deg, 24.0, 1e-9);
    EXPECT_EQ(plan.sectors[s].measure, kOuterMeasures[s]);
  }
}

TEST(Layout, RadialOrdering) {
  EXPECT_EQ(MarkRadius(SupervisionMark::kNone), 0.0);
  EXPECT_GT(MarkRadius(SupervisionMark::kSupervised), 0.0);
  EXPECT_LT(MarkRadius(SupervisionMark::kSupervised), MarkRadius(SupervisionMark::kUnsupervised));
  EXPECT_LE(MarkRadius(SupervisionMark::kUnsupervised), Geometry::kInnerRadius);
  EXPECT_LT(Geometry::kInnerRadius, Geometry::kRingRadius - Geometry::kStripHalfWidth);
}

TEST(Layout, PolygonsAndTicksFollowMarks) {
  const CompassDocument doc = BundledDocument();
  const RenderPlan plan = Layout(doc);
  ASSERT_EQ(plan.polygons.size(), doc.entries.size());
  std::size_t reported = 0;
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    for (auto d : kInnerDimensions) {
      EXPECT_EQ(plan.polygons[i].radii[Index(d)], MarkRadius(doc.entries[i].mark(d)));
    }
    for (auto m : kOuterMeasures) reported += doc.entries[i].reports(m);
  }
  EXPECT_EQ(plan.ticks.size(), reported);
  for (const Tick& t : plan.ticks) {
    EXPECT_EQ(t.band, t.entry);
    EXPECT_TRUE(doc.entries[t.entry].reports(t.measure));
    const Sector& s = plan.sectors[Index(t.measure)];
    EXPECT_GE(t.start_deg, s.start_deg - 1e-9);
    EXPECT_LE(t.end_deg, s.end_deg + 1e-9);
  }
}

TEST(Layout, SixEntriesWidenTheBands) {
  std::mt19937_64 rng(4);
  CompassDocument doc = BundledDocument();
  doc.entries.push_back(testing_support::RandomEntry(rng, 5));
  const RenderPlan plan = Layout(doc);
  EXPECT_EQ(plan.bands_per_sector, 6u);
  EXPECT_EQ(Layout(BundledDocument()).bands_per_sector, 5u);
}

TEST(Layout, InvalidDocumentIsRejected) {
  CompassDocument doc = BundledDocument();
  doc.entries[0].color_slot = doc.entries[1].color_slot;
  EXPECT_THROW(Layout(doc), Error);
}

TEST(Palette, SlotsAreDistinctAndStable) {
  std::set<std::string_view> fills;
  for (const Color& c : Palette()) fills.insert(c.fill_hex);
  EXPECT_EQ(fills.size(), kPaletteSize);
  const auto colors = AssignPalette(BundledDocument());
  for (std::size_t i = 0; i < colors.size(); ++i) EXPECT_EQ(colors[i], PaletteColor(static_cast<int>(i)));
}

TEST(Svg, DeterministicAndWellFormed) {
  const std::string a = RenderSvg(Layout(BundledDocument()));
  const std::string b = RenderSvg(Layout(BundledDocument()));
  EXPECT_EQ(a, b);
  EXPECT_EQ(testing_support::CheckXml(a), "");
  EXPECT_NE(a.find("width=\"800\" height=\"800\""), std::string::npos);
}

TEST(Svg, ElementCounts) {
  const std::string svg = RenderSvg(Layout(BundledDocument()));
  EXPECT_EQ(Count(svg, "class=\"axis\""), 11u);
  EXPECT_EQ(Count(svg, "class=\"sector\""), 15u);
  EXPECT_EQ(Count(svg, "class=\"entry\""), 5u);
  EXPECT_EQ(Count(svg, "class=\"legend-item\""), 5u);
  EXPECT_EQ(Count(svg, "class=\"marking-circle\""), 2u);
  EXPECT_EQ(Count(svg, "class=\"band\""), 3u);  // FedWeIT's three outer marks
}

TEST(Svg, PolygonVerticesSitOnMarkRadii) {
  const CompassDocument doc = BundledDocument();
  const std::string svg = RenderSvg(Layout(doc));
  const auto all_points = testing_support::AttributeValues(svg, "class=\"entry\"", "points");
  ASSERT_EQ(all_points.size(), doc.entries.size());
  for (std::size_t i = 0; i < all_points.size(); ++i) {
    const auto xy = Numbers(all_points[i]);
    ASSERT_EQ(xy.size(), 22u);
    for (std::size_t k = 0; k < 11; ++k) {
      const double r = std::hypot(xy[2 * k] - 400.0, xy[2 * k + 1] - 400.0) / 100.0;
      EXPECT_NEAR(r, MarkRadius(doc.entries[i].inner[k]), 1e-3);
    }
  }
}

TEST(Svg, AxesMatchLayoutAngles) {
  const RenderPlan plan = Layout(BundledDocument());
  const std::string svg = RenderSvg(plan);
  const auto x2 = testing_support::AttributeValues(svg, "class=\"axis\"", "x2");
  const auto y2 = testing_support::AttributeValues(svg, "class=\"axis\"", "y2");
  ASSERT_EQ(x2.size(), 11u);
  for (std::size_t k = 0; k < 11; ++k) {
    double deg = std::atan2(-(std::stod(y2[k]) - 400.0), std::stod(x2[k]) - 400.0) * 180.0 / M_PI;
    if (deg < 0) deg += 360.0;
    double want = std::fmod(plan.axis_angles[k], 360.0);
    if (want < 0) want += 360.0;
    EXPECT_NEAR(deg, want, 1e-3);
  }
}

TEST(Svg, HostileLabelsStayWellFormed) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const CompassDocument doc = testing_support::RandomDocument(rng);
    const std::string svg = RenderSvg(Layout(doc));
    ASSERT_EQ(testing_support::CheckXml(svg), "") << svg;
    ASSERT_EQ(Count(svg, "class=\"entry\""), doc.entries.size());
  }
}

TEST(WrapLabel, WrapsOnlyPastTheWidth) {
  EXPECT_EQ(WrapLabel("A-GEM (Chaudhry et al., 2019)").size(), 2u);
  EXPECT_EQ(WrapLabel("VCL (Nguyen et al., 2018)").size(), 2u);
  EXPECT_EQ(WrapLabel("Short"), std::vector<std::string>{"Short"});
  EXPECT_EQ(WrapLabel(std::string(24, 'x')).size(), 1u);
}

TEST(WrapLabel, SplitsAtWordBoundary) {
  const auto lines = WrapLabel("OSAKA (Caccia et al., 2020)");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "OSAKA (Caccia et al.,");
  EXPECT_EQ(lines[1], "2020)");
}

TEST(WrapLabel, HardBreaksLongWords) {
  const auto lines = WrapLabel(std::string(30, 'y'));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].size(), 24u);
}

TEST(EscapeLatex, Specials) {
  EXPECT_EQ(EscapeLatex("a&b%c$d#e_f{g}h"), "a\\&b\\%c\\$d\\#e\\_f\\{g\\}h");
  EXPECT_EQ(EscapeLatex("~^\\"), "\\textasciitilde{}\\textasciicircum{}\\textbackslash{}");
  EXPECT_EQ(EscapeLatex("λ é"), "λ é");
  EXPECT_THROW(EscapeLatex(std::string("bad\x01")), Error);
}

TEST(Tikz, HostileLabelsAreEscapedAndBalanced) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const CompassDocument doc = testing_support::RandomDocument(rng);
    const std::string tex = RenderTikz(doc);
    ASSERT_EQ(testing_support::CheckTex(tex), "");
    const auto labels = testing_support::LegendLabels(tex);
    ASSERT_EQ(labels.size(), doc.entries.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
      std::string plain;
      ASSERT_TRUE(testing_support::UnescapeTex(labels[k], plain)) << labels[k];
      EXPECT_EQ(plain, doc.entries[k].label);
    }
  }
}

}  // namespace
}  // namespace cleva::render
