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

#include "cleva/error.hpp"
#include "cleva/metrics.hpp"

namespace cleva::metrics {
namespace {

constexpr auto kNa = std::nullopt;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

TEST(AverageAccuracy, Examples) {
  EXPECT_DOUBLE_EQ(AverageAccuracy(AccuracyMatrix::FromRows({{1.0}})), 1.0);
  EXPECT_DOUBLE_EQ(AverageAccuracy(AccuracyMatrix::FromRows(
                       {{0.1, kNa, kNa}, {0.2, 0.3, kNa}, {0.5, 0.5, 0.5}})),
                   0.5);
  EXPECT_NEAR(AverageAccuracy(AccuracyMatrix::FromRows(
                  {{0.1, kNa, kNa}, {0.2, 0.3, kNa}, {0.9, 0.8, 0.7}})),
              0.8, 1e-15);
}

TEST(AccuracyMatrix, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] { AccuracyMatrix::FromRows({{1.2}}); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { AccuracyMatrix::FromRows({{0.5, 0.1}}); }), ErrorCode::kSchema);
  const auto m = AccuracyMatrix::FromRows({{0.5, kNa}, {kNa, 0.5}});
  EXPECT_EQ(CodeOf([&] { AverageAccuracy(m); }), ErrorCode::kMissingEntry);
}

TEST(Omega, Examples) {
  TaskAccuracyTriple t;
  t.alpha_ideal = 0.8;
  t.alpha_base = {0.8, 0.8};
  t.alpha_new = {0.6, 0.8};
  t.alpha_all = {0.0, 0.0};
  const Omega o = OmegaMetrics(t);
  EXPECT_DOUBLE_EQ(o.base, 1.0);
  EXPECT_NEAR(o.new_tasks, 0.7, 1e-15);
  EXPECT_DOUBLE_EQ(o.all, 0.0);
}

TEST(Forgetting, WorkedExample) {
  const auto m = AccuracyMatrix::FromRows({{0.9, kNa}, {0.6, 0.8}});
  const PerTask f = Forgetting(m, 2);
  ASSERT_EQ(f.values.size(), 1u);
  EXPECT_NEAR(f.values[0], 0.3, 1e-15);
  EXPECT_NEAR(f.average, 0.3, 1e-15);
}

TEST(Forgetting, NegativeWhenPerformanceImproves) {
  const auto m = AccuracyMatrix::FromRows({{0.5, kNa}, {0.7, 0.8}});
  EXPECT_NEAR(Forgetting(m, 2).values[0], -0.2, 1e-15);
}

TEST(Forgetting, ConstantColumnGivesZero) {
  const auto m = AccuracyMatrix::FromRows({{0.4, kNa, kNa}, {0.4, 0.6, kNa}, {0.4, 0.2, 0.9}});
  EXPECT_DOUBLE_EQ(Forgetting(m, 3).values[0], 0.0);
  EXPECT_NEAR(Forgetting(m, 3).values[1], 0.4, 1e-15);
}

TEST(Forgetting, TaskRange) {
  const auto m = AccuracyMatrix::FromRows({{0.9, kNa}, {0.6, 0.8}});
  EXPECT_EQ(CodeOf([&] { Forgetting(m, 1); }), ErrorCode::kInvalidTask);
  EXPECT_EQ(CodeOf([&] { Forgetting(m, 3); }), ErrorCode::kInvalidTask);
}

TEST(BackwardTransfer, Examples) {
  EXPECT_NEAR(BackwardTransfer(AccuracyMatrix::FromRows({{0.9, kNa}, {0.6, 0.8}}), 2).average,
              -0.3, 1e-15);
  EXPECT_NEAR(BackwardTransfer(AccuracyMatrix::FromRows({{0.5, kNa}, {0.7, 0.8}}), 2).average,
              0.2, 1e-15);
  EXPECT_DOUBLE_EQ(
      BackwardTransfer(AccuracyMatrix::FromRows({{0.3, kNa, kNa}, {0.3, 0.6, kNa}, {0.3, 0.6, 1}}),
                       3)
          .average,
      0.0);
}

TEST(ForwardTransfer, Examples) {
  EXPECT_NEAR(ForwardTransfer(AccuracyMatrix::FromRows({{0.9, 0.4}, {0.6, 0.8}}), {0.0, 0.1})
                  .average,
              0.3, 1e-15);
  const auto m = AccuracyMatrix::FromRows({{0.9, 0.3, kNa}, {0.6, 0.8, 0.5}, {0.1, 0.2, 0.3}});
  const PerTask fwt = ForwardTransfer(m, {0.0, 0.1, 0.1});
  ASSERT_EQ(fwt.values.size(), 2u);
  EXPECT_NEAR(fwt.values[0], 0.2, 1e-15);
  EXPECT_NEAR(fwt.values[1], 0.4, 1e-15);
  EXPECT_NEAR(fwt.average, 0.3, 1e-15);
  const auto same = AccuracyMatrix::FromRows({{0.9, 0.25}, {0.6, 0.8}});
  EXPECT_DOUBLE_EQ(ForwardTransfer(same, {0.7, 0.25}).average, 0.0);
}

TEST(ForwardTransfer, Errors) {
  const auto m = AccuracyMatrix::FromRows({{0.9, 0.4}, {0.6, 0.8}});
  EXPECT_EQ(CodeOf([&] { ForwardTransfer(m, {0.1}); }), ErrorCode::kLengthMismatch);
  const auto absent = AccuracyMatrix::FromRows({{0.9, kNa}, {0.6, 0.8}});
  EXPECT_EQ(CodeOf([&] { ForwardTransfer(absent, {0.0, 0.1}); }), ErrorCode::kMissingEntry);
}

TEST(Lca, Examples) {
  EXPECT_DOUBLE_EQ(Lca(ConvergenceCurve{{0.4, 0.4, 0.4, 0.4}}, 2), 0.4);
  EXPECT_DOUBLE_EQ(Lca(ConvergenceCurve{{0.25, 0.9}}, 0), 0.25);
  EXPECT_DOUBLE_EQ(Lca(ConvergenceCurve{{1.0, 0.0}}, 1), 0.5);
  EXPECT_EQ(CodeOf([] { Lca(ConvergenceCurve{{1.0, 0.0}}, 2); }), ErrorCode::kIndexOutOfRange);
}

TEST(ZbCurve, Examples) {
  const auto one = ZbCurve({{0.1, 0.5, 0.7}});
  EXPECT_EQ(one.z, (std::vector<double>{0.1, 0.5, 0.7}));
  for (double z : ZbCurve({{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}}).z) EXPECT_DOUBLE_EQ(z, 0.3);
  EXPECT_NEAR(ZbCurve({{0.2, 1.0}, {0.4, 1.0}}).z[0], 0.3, 1e-15);
}

TEST(ZbCurve, Ragged) {
  EXPECT_EQ(CodeOf([] { ZbCurve({{0.2, 1.0}, {0.4}}); }), ErrorCode::kRaggedInput);
  const auto cut = ZbCurve({{0.2, 1.0}, {0.4}}, ZbOptions{true});
  ASSERT_EQ(cut.z.size(), 1u);
  EXPECT_NEAR(cut.z[0], 0.3, 1e-15);
}

TEST(OnlineCodelength, Examples) {
  EXPECT_EQ(OnlineCodelength(PredictionTrace{2, {1.0, 1.0, 1.0}}), 1.0);
  EXPECT_DOUBLE_EQ(OnlineCodelength(PredictionTrace{4, {0.5, 0.5}}), 4.0);
  EXPECT_EQ(CodeOf([] { OnlineCodelength(PredictionTrace{2, {0.5, 0.0}}); }),
            ErrorCode::kZeroProbability);
}

TEST(Openness, Examples) {
  for (std::int64_t n : {1, 5, 100}) {
    const auto r = Openness(ClassCounts{n, n, n});
    EXPECT_EQ(r.value, 0.0);
    EXPECT_FALSE(r.negative);
  }
  EXPECT_NEAR(Openness(ClassCounts{5, 10, 10}).value, 1.0 - std::sqrt(0.5), 1e-12);
  const auto neg = Openness(ClassCounts{10, 5, 5});
  EXPECT_NEAR(neg.value, 1.0 - std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(neg.negative);
  EXPECT_DOUBLE_EQ(Openness(UnknownProbability{0.25}).value, 0.25);
  EXPECT_EQ(CodeOf([] { Openness(ClassCounts{0, 0, 0}); }), ErrorCode::kInvalidCounts);
  EXPECT_EQ(CodeOf([] { Openness(ClassCounts{-1, 2, 2}); }), ErrorCode::kInvalidCounts);
}

TEST(ModelSizeEfficiency, Examples) {
  ResourceTrace r;
  r.mem_theta = {100, 100, 100};
  EXPECT_EQ(ModelSizeEfficiency(r), 1.0);
  r.mem_theta = {100, 200};
  EXPECT_DOUBLE_EQ(ModelSizeEfficiency(r), 0.75);
  r.mem_theta = {100, 50, 25};
  EXPECT_EQ(ModelSizeEfficiency(r), 1.0);
}

TEST(SampleStorageEfficiency, Examples) {
  ResourceTrace r;
  r.mem_dataset = 1000;
  r.mem_buffer = {0, 0, 0};
  EXPECT_EQ(SampleStorageEfficiency(r), 1.0);
  r.mem_buffer = {1000, 1000, 1000};
  EXPECT_DOUBLE_EQ(SampleStorageEfficiency(r), 0.0);
  r.mem_buffer = {500, 500};
  EXPECT_DOUBLE_EQ(SampleStorageEfficiency(r), 0.5);
}

TEST(ComputationalEfficiency, Examples) {
  ResourceTrace r;
  r.ops_train = {10, 20};
  r.ops_one_pass = {10, 20};
  EXPECT_EQ(ComputationalEfficiency(r), 1.0);
  r.ops_train = {100, 200, 300};
  r.ops_one_pass = {10, 20, 30};
  EXPECT_NEAR(ComputationalEfficiency(r), 0.1, 1e-15);
  r.ops_train = {1, 1};
  r.ops_one_pass = {5, 5};
  EXPECT_EQ(ComputationalEfficiency(r), 1.0);
  r.ops_train = {1, 1};
  r.ops_one_pass = {1};
  EXPECT_EQ(CodeOf([&] { ComputationalEfficiency(r); }), ErrorCode::kInvalidTrace);
}

}  // namespace
}  // namespace cleva::metrics
