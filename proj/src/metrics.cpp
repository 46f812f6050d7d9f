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

#include "cleva/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cleva/error.hpp"

namespace cleva::metrics {
namespace {

bool InUnitInterval(double v) { return v >= 0.0 && v <= 1.0; }

std::string Cell(std::size_t i, std::size_t j) {
  return "accuracy_matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

void CheckUnitValues(const std::vector<double>& values, const char* name) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!InUnitInterval(values[i])) {
      throw Error(ErrorCode::kSchema, std::string(name) + " values must lie in [0, 1]",
                  std::string(name) + "[" + std::to_string(i) + "]");
    }
  }
}

void CheckTask(const AccuracyMatrix& m, std::size_t after_task) {
  if (after_task < 2 || after_task > m.tasks()) {
    throw Error(ErrorCode::kInvalidTask,
                "task must be in [2, " + std::to_string(m.tasks()) + "], got " +
                    std::to_string(after_task));
  }
}

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double Normalizer(const std::optional<double>& n, std::size_t steps) {
  const double value = n.value_or(static_cast<double>(steps));
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidTrace, "normalizer N must be positive", "resources.n");
  }
  return value;
}

}  // namespace

AccuracyMatrix::AccuracyMatrix(std::size_t tasks)
    : tasks_(tasks), cells_(tasks * tasks) {
  if (tasks == 0) throw Error(ErrorCode::kSchema, "accuracy matrix needs T >= 1");
}

AccuracyMatrix AccuracyMatrix::FromRows(const std::vector<Row>& rows) {
  AccuracyMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kSchema, "accuracy matrix must be square",
                  "accuracy_matrix[" + std::to_string(i) + "]");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

const std::optional<double>& AccuracyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= tasks_ || j >= tasks_) {
    throw Error(ErrorCode::kIndexOutOfRange, "matrix index out of range", Cell(i, j));
  }
  return cells_[i * tasks_ + j];
}

void AccuracyMatrix::set(std::size_t i, std::size_t j, std::optional<double> value) {
  if (i >= tasks_ || j >= tasks_) {
    throw Error(ErrorCode::kIndexOutOfRange, "matrix index out of range", Cell(i, j));
  }
  if (value && !InUnitInterval(*value)) {
    throw Error(ErrorCode::kSchema, "accuracy must lie in [0, 1]", Cell(i, j));
  }
  cells_[i * tasks_ + j] = value;
}

double AccuracyMatrix::Require(std::size_t i, std::size_t j) const {
  const auto& v = at(i, j);
  if (!v) throw Error(ErrorCode::kMissingEntry, "required entry is absent", Cell(i, j));
  return *v;
}

double AverageAccuracy(const AccuracyMatrix& m) {
  const std::size_t last = m.tasks() - 1;
  double sum = 0.0;
  for (std::size_t t = 0; t < m.tasks(); ++t) sum += m.Require(last, t);
  return sum / static_cast<double>(m.tasks());
}

Omega OmegaMetrics(const TaskAccuracyTriple& t) {
  const std::size_t steps = t.alpha_new.size();
  if (steps == 0) throw Error(ErrorCode::kInvalidTask, "alpha lists need T >= 2", "alpha");
  if (t.alpha_base.size() != steps || t.alpha_all.size() != steps) {
    throw Error(ErrorCode::kLengthMismatch, "alpha lists must share length T-1", "alpha");
  }
  CheckUnitValues(t.alpha_new, "alpha.new");
  CheckUnitValues(t.alpha_base, "alpha.base");
  CheckUnitValues(t.alpha_all, "alpha.all");
  if (!(t.alpha_ideal > 0.0) || t.alpha_ideal > 1.0) {
    throw Error(ErrorCode::kSchema, "alpha_ideal must lie in (0, 1]", "alpha.ideal");
  }

  Omega out;
  double base = 0.0, all = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    base += t.alpha_base[i] / t.alpha_ideal;
    all += t.alpha_all[i] / t.alpha_ideal;
  }
  const double n = static_cast<double>(steps);
  out.base = base / n;
  out.new_tasks = Mean(t.alpha_new);
  out.all = all / n;
  return out;
}

PerTask Forgetting(const AccuracyMatrix& m, std::size_t after_task) {
  CheckTask(m, after_task);
  const std::size_t t = after_task - 1;  // 0-based row of the current task
  PerTask out;
  out.values.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    // Rows from task j on are required; earlier rows (task j not yet seen)
    // join the maximum only when recorded.
    double best = m.Require(j, j);
    for (std::size_t i = 0; i < t; ++i) {
      if (i >= j) {
        best = std::max(best, m.Require(i, j));
      } else if (m.at(i, j)) {
        best = std::max(best, *m.at(i, j));
      }
    }
    out.values.push_back(best - m.Require(t, j));
  }
  out.average = Mean(out.values);
  return out;
}

PerTask BackwardTransfer(const AccuracyMatrix& m, std::size_t after_task) {
  CheckTask(m, after_task);
  const std::size_t t = after_task - 1;
  PerTask out;
  out.values.reserve(t);
  for (std::size_t j = 0; j < t; ++j) out.values.push_back(m.Require(t, j) - m.Require(j, j));
  out.average = Mean(out.values);
  return out;
}

PerTask ForwardTransfer(const AccuracyMatrix& m, const std::vector<double>& baseline) {
  if (baseline.size() != m.tasks()) {
    throw Error(ErrorCode::kLengthMismatch,
                "baseline has " + std::to_string(baseline.size()) + " values for T=" +
                    std::to_string(m.tasks()),
                "baseline");
  }
  CheckUnitValues(baseline, "baseline");
  if (m.tasks() < 2) throw Error(ErrorCode::kInvalidTask, "forward transfer needs T >= 2");
  PerTask out;
  for (std::size_t j = 1; j < m.tasks(); ++j) {
    out.values.push_back(m.Require(j - 1, j) - baseline[j]);
  }
  out.average = Mean(out.values);
  return out;
}

ConvergenceCurve ZbCurve(const std::vector<std::vector<double>>& raw,
                         const ZbOptions& options) {
  if (raw.empty()) throw Error(ErrorCode::kSchema, "no tasks in raw batch accuracies");
  std::size_t shortest = raw.front().size();
  for (std::size_t t = 0; t < raw.size(); ++t) {
    if (raw[t].size() != raw.front().size() && !options.truncate_to_shortest) {
      throw Error(ErrorCode::kRaggedInput,
                  "tasks disagree on the available mini-batch range",
                  "raw_batch_accuracy[" + std::to_string(t) + "]");
    }
    shortest = std::min(shortest, raw[t].size());
    CheckUnitValues(raw[t], "raw_batch_accuracy");
  }
  if (shortest == 0) throw Error(ErrorCode::kSchema, "empty mini-batch range");

  ConvergenceCurve curve;
  curve.z.reserve(shortest);
  for (std::size_t b = 0; b < shortest; ++b) {
    double sum = 0.0;
    for (const auto& task : raw) sum += task[b];
    curve.z.push_back(sum / static_cast<double>(raw.size()));
  }
  return curve;
}

double Lca(const ConvergenceCurve& curve, std::size_t beta) {
  if (beta >= curve.z.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "beta=" + std::to_string(beta) + " exceeds curve of length " +
                    std::to_string(curve.z.size()),
                "zb");
  }
  CheckUnitValues(curve.z, "zb");
  double sum = 0.0;
  for (std::size_t b = 0; b <= beta; ++b) sum += curve.z[b];
  return sum / static_cast<double>(beta + 1);
}

double OnlineCodelength(const PredictionTrace& trace) {
  if (trace.num_labels < 2) {
    throw Error(ErrorCode::kInvalidTrace, "num_labels must be >= 2",
                "prediction_trace.num_labels");
  }
  if (trace.probs.empty()) {
    throw Error(ErrorCode::kInvalidTrace, "trace needs N >= 2 instances",
                "prediction_trace.probs");
  }
  double bits = std::log2(static_cast<double>(trace.num_labels));
  for (std::size_t i = 0; i < trace.probs.size(); ++i) {
    const double p = trace.probs[i];
    const std::string path = "prediction_trace.probs[" + std::to_string(i) + "]";
    if (p == 0.0) {
      throw Error(ErrorCode::kZeroProbability,
                  "zero probability for the true label: codelength is infinite", path);
    }
    if (!(p > 0.0) || p > 1.0) {
      throw Error(ErrorCode::kInvalidTrace, "probability must lie in (0, 1]", path);
    }
    bits -= std::log2(p);
  }
  return bits;
}

OpennessResult Openness(const OpennessSpec& spec) {
  if (const auto* p = std::get_if<UnknownProbability>(&spec)) {
    if (!InUnitInterval(p->value)) {
      throw Error(ErrorCode::kInvalidCounts, "unknown_probability must lie in [0, 1]",
                  "openness.unknown_probability");
    }
    return {p->value, false};
  }
  const auto& c = std::get<ClassCounts>(spec);
  if (c.n_train <= 0 || c.n_test <= 0 || c.n_target <= 0) {
    throw Error(ErrorCode::kInvalidCounts, "class counts must be positive", "openness");
  }
  const double ratio = 2.0 * static_cast<double>(c.n_train) /
                       static_cast<double>(c.n_test + c.n_target);
  const double value = 1.0 - std::sqrt(ratio);
  return {value, value < 0.0};
}

double ModelSizeEfficiency(const ResourceTrace& r) {
  if (r.mem_theta.empty()) {
    throw Error(ErrorCode::kInvalidTrace, "mem_theta is empty", "resources.mem_theta");
  }
  for (std::size_t t = 0; t < r.mem_theta.size(); ++t) {
    if (!(r.mem_theta[t] > 0.0) || !std::isfinite(r.mem_theta[t])) {
      throw Error(ErrorCode::kInvalidTrace, "parameter counts must be positive",
                  "resources.mem_theta[" + std::to_string(t) + "]");
    }
  }
  const double n = Normalizer(r.normalizer, r.mem_theta.size());
  double sum = 0.0;
  for (double mem : r.mem_theta) sum += r.mem_theta.front() / mem;
  return std::min(1.0, sum / n);
}

double SampleStorageEfficiency(const ResourceTrace& r) {
  if (r.mem_buffer.empty()) {
    throw Error(ErrorCode::kInvalidTrace, "mem_buffer is empty", "resources.mem_buffer");
  }
  if (!r.mem_dataset || !(*r.mem_dataset > 0.0) || !std::isfinite(*r.mem_dataset)) {
    throw Error(ErrorCode::kInvalidTrace, "mem_dataset must be positive",
                "resources.mem_dataset");
  }
  for (std::size_t t = 0; t < r.mem_buffer.size(); ++t) {
    if (!(r.mem_buffer[t] >= 0.0) || !std::isfinite(r.mem_buffer[t])) {
      throw Error(ErrorCode::kInvalidTrace, "buffer sizes must be non-negative",
                  "resources.mem_buffer[" + std::to_string(t) + "]");
    }
  }
  const double n = Normalizer(r.normalizer, r.mem_buffer.size());
  double sum = 0.0;
  for (double mem : r.mem_buffer) sum += mem / *r.mem_dataset;
  return 1.0 - std::min(1.0, sum / n);
}

double ComputationalEfficiency(const ResourceTrace& r) {
  if (r.ops_train.empty()) {
    throw Error(ErrorCode::kInvalidTrace, "ops_train is empty", "resources.ops_train");
  }
  if (r.ops_one_pass.size() != r.ops_train.size()) {
    throw Error(ErrorCode::kInvalidTrace, "ops_one_pass and ops_train differ in length",
                "resources.ops_one_pass");
  }
  for (std::size_t t = 0; t < r.ops_train.size(); ++t) {
    if (!(r.ops_train[t] > 0.0) || !std::isfinite(r.ops_train[t])) {
      throw Error(ErrorCode::kInvalidTrace, "training operation counts must be positive",
                  "resources.ops_train[" + std::to_string(t) + "]");
    }
    if (!(r.ops_one_pass[t] > 0.0) || !std::isfinite(r.ops_one_pass[t])) {
      throw Error(ErrorCode::kInvalidTrace, "one-pass operation counts must be positive",
                  "resources.ops_one_pass[" + std::to_string(t) + "]");
    }
  }
  const double n = Normalizer(r.normalizer, r.ops_train.size());
  double sum = 0.0;
  for (std::size_t t = 0; t < r.ops_train.size(); ++t) sum += r.ops_one_pass[t] / r.ops_train[t];
  return std::min(1.0, sum / n);
}

}  // namespace cleva::metrics
