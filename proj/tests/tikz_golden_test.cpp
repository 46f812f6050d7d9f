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

#include <fstream>
#include <sstream>

#include "cleva/descriptor.hpp"
#include "cleva/render.hpp"
#include "support/svg_scan.hpp"
#include "support/tex_labels.hpp"

namespace cleva::render {
namespace {

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << "missing " << path;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string& FiveMethodsTex() {
  static const std::string tex =
      RenderTikz(ParseDocument(Slurp(std::string(CLEVA_FIXTURES_DIR) + "/five_methods.json")));
  return tex;
}

// Regenerate with: cmake --build build --target update_golden
TEST(TikzGolden, MatchesFrozenFile) {
  const std::string golden = Slurp(std::string(CLEVA_GOLDEN_DIR) + "/five_methods.tex");
  ASSERT_FALSE(golden.empty());
  EXPECT_TRUE(FiveMethodsTex() == golden) << "TikZ output drifted from tests/golden/five_methods.tex";
}

TEST(TikzGolden, BalancedAndSelfContained) {
  const std::string& tex = FiveMethodsTex();
  EXPECT_EQ(testing_support::CheckTex(tex), "");
  EXPECT_EQ(testing_support::Count(tex, "\\begin{tikzpicture}"), 2u);
  EXPECT_EQ(tex.find("\\documentclass"), std::string::npos);
  EXPECT_EQ(tex.rfind("\\begingroup", tex.find("\\begin{tikzpicture}")) != std::string::npos, true);
}

TEST(TikzGolden, LegendLabelsRoundTrip) {
  const auto labels = testing_support::LegendLabels(FiveMethodsTex());
  const std::vector<std::string> want = {
      "OSAKA (Caccia et al., 2020)", "FedWeIT (Yoon et al., 2021)",
      "A-GEM (Chaudhry et al., 2019)", "VCL (Nguyen et al., 2018)",
      "OCDVAE (Mundt et al., 2020)"};
  ASSERT_EQ(labels.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    std::string plain;
    ASSERT_TRUE(testing_support::UnescapeTex(labels[i], plain));
    EXPECT_EQ(plain, want[i]);
  }
}

}  // namespace
}  // namespace cleva::render
