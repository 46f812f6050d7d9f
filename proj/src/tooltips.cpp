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

#include "cleva/tooltips.hpp"

#include <array>
#include <string>

namespace cleva {
namespace {

constexpr std::array<std::string_view, kInnerDimensionCount> kInnerTips = {
    // task_agnostic
    "A task agnostic method does not require any additional information for which "
    "task a data instance originates from when predicting. Supervised: a task label "
    "or context variable is conditioned on and later inferred (e.g. OSAKA, A-GEM). "
    "Unsupervised: correct predictions for any previously observed task without such "
    "information. No mark: a task oracle is needed at prediction time.",
    // task_order_discovery
    "The method chooses which task to learn next instead of following a fixed "
    "benchmark sequence. Supervised: the choice uses prospective class labels "
    "(e.g. OCDVAE's class-specific meta-recognition). Unsupervised: the choice uses "
    "label-free distances or divergences in a feature space.",
    // active_data_query
    "The method actively selects which data instances enter optimization, from a "
    "pool or a stream. Supervised: the utility measure needs labels (e.g. OCDVAE). "
    "Unsupervised: the utility measure is label-free.",
    // multiple_modalities
    "The system learns from more than one modality, such as audio and images. "
    "Supervised: it needs a label naming each instance's modality (e.g. OCDVAE). "
    "Unsupervised: modalities are handled without such a label.",
    // open_world
    "The learner must identify unknown, corrupted or perturbed instances. "
    "Supervised: the recognition mechanism relies on class information, e.g. a "
    "supervised loss (OSAKA) or class-mean meta-recognition (OCDVAE). Unsupervised: "
    "e.g. a reconstruction loss or a divergence in an arbitrary feature space.",
    // online
    "Observed data instances are never revisited. Supervised: e.g. supervised "
    "representation pre-training (OSAKA) or supervised parameter importance. "
    "Unsupervised: e.g. exponential moving averages. No mark: several epochs per task.",
    // federated
    "Training is distributed across devices. Supervised: side information about "
    "device groups or participation steers training. Unsupervised: communicated "
    "updates are simply aggregated (e.g. FedWeIT).",
    // multiple_models
    "More than one model is employed. Supervised: an extra mechanism indexes the "
    "right model for prediction (e.g. FedWeIT's attention masks). Unsupervised: the "
    "correct model is queried automatically. No mark: a single model.",
    // uncertainty
    "The method provides uncertainty estimates. Supervised: estimates need "
    "calibration, e.g. classifier entropy. Unsupervised: inherent uncertainties, "
    "e.g. the Bayesian treatment of VCL.",
    // generative
    "The method trains a generative model. Supervised: it learns the joint p(x, y). "
    "Unsupervised: it learns only p(x) (e.g. VCL).",
    // episodic_memory
    "An auxiliary buffer of exemplars is rehearsed. Supervised: its construction "
    "uses labels, e.g. per-class means (OCDVAE). Unsupervised: random sampling "
    "(A-GEM) or clustering such as k-means (VCL).",
};

constexpr std::array<std::string_view, kOuterMeasureCount> kOuterTips = {
    // data_per_task
    "What data is introduced sequentially. The number of instances indicates "
    "sample efficiency and gives context, e.g. for few-shot settings.",
    // task_order
    "The order in which tasks arrive, even if randomly sampled. The order strongly "
    "affects obtainable continual performance.",
    // per_task_metrics
    "Task-specific parts of losses or metrics, e.g. \"new\", \"base\" and \"all\" "
    "accuracies, show how each task evolves over time.",
    // optimization_steps
    "Number of optimization steps. Needed to judge convergence and to separate "
    "continual offline from truly online scenarios.",
    // generated_data
    "Amount of data generated, if any. Quality and number of generated instances "
    "determine the effectiveness of rehearsal.",
    // stored_data
    "Amount of original data kept in a buffer, if any. Rehearsal becomes trivial as "
    "the buffer approaches the full dataset size.",
    // parameters
    "Number of overall parameters. Allocating ever more separate parameters is a "
    "trivial solution, so parameter efficiency matters.",
    // memory
    "Memory used overall: a combined view of data storage and parameter efficiency.",
    // compute_time
    "Practical computation time, which depends on algorithm, software and hardware.",
    // mac_operations
    "Number of multiply-accumulate operations: a compute measure not tied to "
    "specific software or hardware.",
    // communication
    "Communication cost in distributed or federated settings, where rounds of "
    "communication can exceed the cost of computation.",
    // forgetting
    "The amount of forgetting is a way to quantify the difference between maximum "
    "knowledge gained about the task throughout the learning process in the past "
    "and the knowledge that is currently still held about it.",
    // forward_transfer
    "Influence that an observed task has on a future task, quantifying zero-shot "
    "ability relative to a random baseline.",
    // backward_transfer
    "Improvement or deterioration an already observed task experiences when a new "
    "task is learned (BWT).",
    // openness
    "Proportion between data assumed to come from the investigated distribution and "
    "potentially unknown, corrupted or perturbed instances.",
};

}  // namespace

std::string_view Tooltip(InnerDimension d) { return kInnerTips[Index(d)]; }
std::string_view Tooltip(OuterMeasure m) { return kOuterTips[Index(m)]; }

nlohmann::ordered_json TooltipsToJson() {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["inner"] = nlohmann::ordered_json::object();
  for (auto d : kInnerDimensions) out["inner"][std::string(Key(d))] = std::string(Tooltip(d));
  out["outer"] = nlohmann::ordered_json::object();
  for (auto m : kOuterMeasures) out["outer"][std::string(Key(m))] = std::string(Tooltip(m));
  return out;
}

}  // namespace cleva
