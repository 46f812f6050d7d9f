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

#ifndef CLEVA_METRICS_HPP_
#define CLEVA_METRICS_HPP_

// Continual-learning evaluation measures as pure functions. Task numbers in
// the public API are 1-based (task t = "after training on task t"); storage
// and the per-task result vectors are 0-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace cleva::metrics {

// a(i, j): test accuracy on task j after the last sample of task i.
// Absent entries are kept absent; nothing is imputed.
class AccuracyMatrix {
 public:
  using Row = std::vector<std::optional<double>>;

  explicit AccuracyMatrix(std::size_t tasks);

  // Throws kSchema for non-square input or values outside [0, 1].
  static AccuracyMatrix FromRows(const std::vector<Row>& rows);

  std::size_t tasks() const { return tasks_; }

  // 0-based access.
  const std::optional<double>& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::optional<double> value);

  // Throws kMissingEntry when absent.
  double Require(std::size_t i, std::size_t j) const;

 private:
  std::size_t tasks_;
  std::vector<std::optional<double>> cells_;
};

struct PerTask {
  std::vector<double> values;
  double average = 0.0;
};

// Mean of the final row.
double AverageAccuracy(const AccuracyMatrix& m);

struct TaskAccuracyTriple {
  std::vector<double> alpha_new;   // t = 2..T
  std::vector<double> alpha_base;  // t = 2..T
  std::vector<double> alpha_all;   // t = 2..T
  double alpha_ideal = 1.0;        // offline accuracy on the base set
};

struct Omega {
  double base = 0.0;
  double new_tasks = 0.0;
  double all = 0.0;
};

Omega OmegaMetrics(const TaskAccuracyTriple& t);

// f_j^t = max_{i<t} a(i, j) - a(t, j) for j < t, and their mean F_t.
PerTask Forgetting(const AccuracyMatrix& m, std::size_t after_task);

// BWT_{t,j} = a(t, j) - a(j, j) for j < t, and their mean.
PerTask BackwardTransfer(const AccuracyMatrix& m, std::size_t after_task);

// a(j-1, j) - b_j for j = 2..T, averaged over T-1.
PerTask ForwardTransfer(const AccuracyMatrix& m, const std::vector<double>& baseline);

// Z_b for b = 0..B.
struct ConvergenceCurve {
  std::vector<double> z;
};

// raw[t][b] = accuracy on task t after b mini-batches of task t.
struct ZbOptions {
  bool truncate_to_shortest = false;
};
ConvergenceCurve ZbCurve(const std::vector<std::vector<double>>& raw,
                         const ZbOptions& options = {});

// Learning curve area: mean of Z_0..Z_beta.
double Lca(const ConvergenceCurve& curve, std::size_t beta);

struct PredictionTrace {
  std::int64_t num_labels = 2;
  // Probability of the true label for instances 2..N, in stream order.
  std::vector<double> probs;
};

// Prequential codelength in bits. Throws kZeroProbability if any p is 0.
double OnlineCodelength(const PredictionTrace& trace);

struct ClassCounts {
  std::int64_t n_train = 0;
  std::int64_t n_test = 0;
  std::int64_t n_target = 0;
};
struct UnknownProbability {
  double value = 0.0;
};
using OpennessSpec = std::variant<ClassCounts, UnknownProbability>;

struct OpennessResult {
  double value = 0.0;
  // Set when class counts give a negative openness (training covers more
  // classes than are tested/targeted). The value is not clamped.
  bool negative = false;
};

OpennessResult Openness(const OpennessSpec& spec);

struct ResourceTrace {
  std::vector<double> mem_theta;     // parameter count per step
  std::vector<double> mem_buffer;    // stored-sample size per step
  std::optional<double> mem_dataset; // total observed dataset size
  std::vector<double> ops_train;     // operations to learn D_t
  std::vector<double> ops_one_pass;  // one forward + backward pass on D_t
  std::optional<double> normalizer;  // N; defaults to the number of steps
};

double ModelSizeEfficiency(const ResourceTrace& r);
double SampleStorageEfficiency(const ResourceTrace& r);
double ComputationalEfficiency(const ResourceTrace& r);

}  // namespace cleva::metrics

#endif  // CLEVA_METRICS_HPP_
