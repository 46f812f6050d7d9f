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

#include "cleva/experiment_log.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>

#include "cleva/error.hpp"

namespace cleva {
namespace {

using nlohmann::json;
using namespace metrics;

constexpr std::array<std::string_view, 15> kReportKeys = {
    "average_accuracy", "omega_base",        "omega_new",        "omega_all",
    "forgetting",       "backward_transfer", "forward_transfer", "lca",
    "online_codelength", "openness",         "parameters",       "stored_data",
    "mac_operations",   "compute_time",      "communication"};

[[noreturn]] void SchemaFail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kSchema, path + ": " + message, path);
}

double Number(const json& v, const std::string& path) {
  if (!v.is_number()) SchemaFail(path, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) SchemaFail(path, "must be finite");
  return d;
}

std::vector<double> NumberList(const json& v, const std::string& path) {
  if (!v.is_array()) SchemaFail(path, "must be a list of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(Number(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::int64_t Integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) SchemaFail(path, "must be an integer");
  return v.get<std::int64_t>();
}

void RejectUnknown(const json& obj, const std::string& path,
                   std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      SchemaFail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const json& Field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) SchemaFail(path + "." + key, "missing required field");
  return *it;
}

AccuracyMatrix ParseMatrix(const json& v) {
  const std::string path = "accuracy_matrix";
  if (!v.is_array() || v.empty()) SchemaFail(path, "must be a non-empty list of rows");
  std::vector<AccuracyMatrix::Row> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) SchemaFail(row_path, "must be a list");
    AccuracyMatrix::Row row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      const json& cell = v[i][j];
      if (cell.is_null()) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(Number(cell, row_path + "[" + std::to_string(j) + "]"));
      }
    }
    rows.push_back(std::move(row));
  }
  return AccuracyMatrix::FromRows(rows);
}

TaskAccuracyTriple ParseAlpha(const json& v) {
  if (!v.is_object()) SchemaFail("alpha", "must be an object");
  RejectUnknown(v, "alpha", {"new", "base", "all", "ideal"});
  TaskAccuracyTriple t;
  t.alpha_new = NumberList(Field(v, "alpha", "new"), "alpha.new");
  t.alpha_base = NumberList(Field(v, "alpha", "base"), "alpha.base");
  t.alpha_all = NumberList(Field(v, "alpha", "all"), "alpha.all");
  t.alpha_ideal = Number(Field(v, "alpha", "ideal"), "alpha.ideal");
  return t;
}

ConvergenceCurve ParseRawBatches(const json& v, const LogParseOptions& options) {
  const std::string path = "raw_batch_accuracy";
  if (!v.is_array()) SchemaFail(path, "must be a list of per-task lists");
  std::vector<std::vector<double>> raw;
  for (std::size_t t = 0; t < v.size(); ++t) {
    raw.push_back(NumberList(v[t], path + "[" + std::to_string(t) + "]"));
  }
  return ZbCurve(raw, {.truncate_to_shortest = options.truncate_ragged});
}

PredictionTrace ParseTrace(const json& v) {
  if (!v.is_object()) SchemaFail("prediction_trace", "must be an object");
  RejectUnknown(v, "prediction_trace", {"num_labels", "probs"});
  PredictionTrace tr;
  tr.num_labels = Integer(Field(v, "prediction_trace", "num_labels"),
                          "prediction_trace.num_labels");
  tr.probs = NumberList(Field(v, "prediction_trace", "probs"), "prediction_trace.probs");
  return tr;
}

OpennessSpec ParseOpenness(const json& v) {
  if (!v.is_object()) SchemaFail("openness", "must be an object");
  if (v.contains("unknown_probability")) {
    if (v.size() != 1) {
      SchemaFail("openness", "use either class counts or unknown_probability, not both");
    }
    return UnknownProbability{Number(v.at("unknown_probability"),
                                     "openness.unknown_probability")};
  }
  RejectUnknown(v, "openness", {"n_train", "n_test", "n_target"});
  return ClassCounts{Integer(Field(v, "openness", "n_train"), "openness.n_train"),
                     Integer(Field(v, "openness", "n_test"), "openness.n_test"),
                     Integer(Field(v, "openness", "n_target"), "openness.n_target")};
}

ResourceTrace ParseResources(const json& v) {
  const std::string path = "resources";
  if (!v.is_object()) SchemaFail(path, "must be an object");
  RejectUnknown(v, path,
                {"mem_theta", "mem_buffer", "mem_dataset", "ops_train", "ops_one_pass", "n"});
  ResourceTrace r;
  if (v.contains("mem_theta")) r.mem_theta = NumberList(v.at("mem_theta"), path + ".mem_theta");
  if (v.contains("mem_buffer")) {
    r.mem_buffer = NumberList(v.at("mem_buffer"), path + ".mem_buffer");
  }
  if (v.contains("mem_dataset")) r.mem_dataset = Number(v.at("mem_dataset"), path + ".mem_dataset");
  if (v.contains("ops_train")) r.ops_train = NumberList(v.at("ops_train"), path + ".ops_train");
  if (v.contains("ops_one_pass")) {
    r.ops_one_pass = NumberList(v.at("ops_one_pass"), path + ".ops_one_pass");
  }
  if (v.contains("n")) r.normalizer = Number(v.at("n"), path + ".n");
  return r;
}

bool IsReportKey(std::string_view key) {
  return std::find(kReportKeys.begin(), kReportKeys.end(), key) != kReportKeys.end();
}

}  // namespace

ExperimentLog ParseExperimentLog(std::string_view text, const LogParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "experiment log must be an object");
  RejectUnknown(doc, "",
                {"accuracy_matrix", "alpha", "baseline", "zb", "raw_batch_accuracy",
                 "prediction_trace", "openness", "resources", "compute_time",
                 "communication", "lca_beta"});
  if (doc.contains("zb") && doc.contains("raw_batch_accuracy")) {
    SchemaFail("zb", "give either zb or raw_batch_accuracy, not both");
  }

  ExperimentLog log;
  if (auto it = doc.find("accuracy_matrix"); it != doc.end()) log.accuracy_matrix = ParseMatrix(*it);
  if (auto it = doc.find("alpha"); it != doc.end()) log.alpha = ParseAlpha(*it);
  if (auto it = doc.find("baseline"); it != doc.end()) log.baseline = NumberList(*it, "baseline");
  if (auto it = doc.find("zb"); it != doc.end()) log.zb = ConvergenceCurve{NumberList(*it, "zb")};
  if (auto it = doc.find("raw_batch_accuracy"); it != doc.end()) {
    log.zb = ParseRawBatches(*it, options);
  }
  if (auto it = doc.find("prediction_trace"); it != doc.end()) {
    log.prediction_trace = ParseTrace(*it);
  }
  if (auto it = doc.find("openness"); it != doc.end()) log.openness = ParseOpenness(*it);
  if (auto it = doc.find("resources"); it != doc.end()) log.resources = ParseResources(*it);
  if (auto it = doc.find("compute_time"); it != doc.end()) {
    log.compute_time = Number(*it, "compute_time");
  }
  if (auto it = doc.find("communication"); it != doc.end()) {
    log.communication = Number(*it, "communication");
  }
  if (auto it = doc.find("lca_beta"); it != doc.end()) {
    const auto beta = Integer(*it, "lca_beta");
    if (beta < 0) SchemaFail("lca_beta", "must be >= 0");
    log.lca_beta = static_cast<std::size_t>(beta);
  }
  return log;
}

std::span<const std::string_view> ReportKeys() { return kReportKeys; }

std::optional<double> MetricsReport::Get(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

nlohmann::ordered_json MetricsReport::ToJson() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) out[k] = v;
  return out;
}

MetricsReport ComputeReport(const ExperimentLog& log, const ReportOptions& options) {
  for (const auto& key : options.select) {
    if (!IsReportKey(key)) throw Error(ErrorCode::kUsage, "unknown metric key: " + key);
  }
  auto wanted = [&](std::string_view key) {
    return options.select.empty() ||
           std::find(options.select.begin(), options.select.end(), key) != options.select.end();
  };

  // Collected unordered, emitted in kReportKeys order.
  std::vector<std::pair<std::string, double>> found;
  MetricsReport report;
  auto put = [&](std::string_view key, double value) {
    if (wanted(key)) found.emplace_back(std::string(key), value);
  };

  if (log.accuracy_matrix) {
    const AccuracyMatrix& m = *log.accuracy_matrix;
    if (wanted("average_accuracy")) put("average_accuracy", AverageAccuracy(m));
    if (m.tasks() >= 2) {
      if (wanted("forgetting")) put("forgetting", Forgetting(m, m.tasks()).average);
      if (wanted("backward_transfer")) {
        put("backward_transfer", BackwardTransfer(m, m.tasks()).average);
      }
    } else if (wanted("forgetting") || wanted("backward_transfer")) {
      report.warnings.push_back("forgetting and backward transfer need T >= 2; skipped");
    }
    if (log.baseline && wanted("forward_transfer")) {
      put("forward_transfer", ForwardTransfer(m, *log.baseline).average);
    }
  }
  if (log.baseline && !log.accuracy_matrix) {
    report.warnings.push_back("baseline given without accuracy_matrix; forward transfer skipped");
  }
  if (log.alpha && (wanted("omega_base") || wanted("omega_new") || wanted("omega_all"))) {
    const Omega omega = OmegaMetrics(*log.alpha);
    put("omega_base", omega.base);
    put("omega_new", omega.new_tasks);
    put("omega_all", omega.all);
  }
  if (log.zb && wanted("lca")) {
    const std::size_t beta = log.lca_beta.value_or(log.zb->z.empty() ? 0 : log.zb->z.size() - 1);
    put("lca", Lca(*log.zb, beta));
  }
  if (log.prediction_trace && wanted("online_codelength")) {
    put("online_codelength", OnlineCodelength(*log.prediction_trace));
  }
  if (log.openness && wanted("openness")) {
    const OpennessResult o = Openness(*log.openness);
    if (o.negative) {
      report.warnings.push_back(
          fmt::format("openness is negative ({:.6f}): more training classes than "
                      "tested/targeted classes",
                      o.value));
    }
    put("openness", o.value);
  }
  if (log.resources) {
    const ResourceTrace& r = *log.resources;
    if (!r.mem_theta.empty() && wanted("parameters")) put("parameters", ModelSizeEfficiency(r));
    if ((!r.mem_buffer.empty() || r.mem_dataset) && wanted("stored_data")) {
      put("stored_data", SampleStorageEfficiency(r));
    }
    if ((!r.ops_train.empty() || !r.ops_one_pass.empty()) && wanted("mac_operations")) {
      put("mac_operations", ComputationalEfficiency(r));
    }
  }
  if (log.compute_time) put("compute_time", *log.compute_time);
  if (log.communication) put("communication", *log.communication);

  for (auto key : kReportKeys) {
    for (const auto& [k, v] : found) {
      if (k == key) report.values.emplace_back(k, v);
    }
  }
  return report;
}

}  // namespace cleva
