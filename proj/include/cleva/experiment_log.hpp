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

#ifndef CLEVA_EXPERIMENT_LOG_HPP_
#define CLEVA_EXPERIMENT_LOG_HPP_

// Ingestion of experiment logs and the flat metrics report built from them.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cleva/metrics.hpp"
#include "json.hpp"

namespace cleva {

struct ExperimentLog {
  std::optional<metrics::AccuracyMatrix> accuracy_matrix;
  std::optional<metrics::TaskAccuracyTriple> alpha;
  std::optional<std::vector<double>> baseline;
  std::optional<metrics::ConvergenceCurve> zb;
  std::optional<metrics::PredictionTrace> prediction_trace;
  std::optional<metrics::OpennessSpec> openness;
  std::optional<metrics::ResourceTrace> resources;
  // Reported as-is; there is no formula behind them.
  std::optional<double> compute_time;
  std::optional<double> communication;
  std::optional<std::size_t> lca_beta;
};

struct LogParseOptions {
  // Truncate ragged raw_batch_accuracy to the shortest task instead of failing.
  bool truncate_ragged = false;
};

// Throws Error(kSyntax) for malformed JSON, Error(kSchema) for unknown or
// mistyped sections, and the metric errors for invalid section contents.
ExperimentLog ParseExperimentLog(std::string_view text, const LogParseOptions& options = {});

// Every key a report may contain, in report order. Outer-measure keys are used
// where a measure exists (parameters = MS, stored_data = SSS,
// mac_operations = CE); the rest name the scalar they hold.
std::span<const std::string_view> ReportKeys();

struct MetricsReport {
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> warnings;

  std::optional<double> Get(std::string_view key) const;
  nlohmann::ordered_json ToJson() const;
};

struct ReportOptions {
  // Restrict to these keys; empty means everything the log supports.
  // Unknown keys throw Error(kUsage).
  std::vector<std::string> select;
};

MetricsReport ComputeReport(const ExperimentLog& log, const ReportOptions& options = {});

}  // namespace cleva

#endif  // CLEVA_EXPERIMENT_LOG_HPP_
