// Copyright 2026 The procnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROCNOISE_EVAL_ATTACK_EVAL_HPP_
#define PROCNOISE_EVAL_ATTACK_EVAL_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "procnoise/classifier/classifier.hpp"
#include "procnoise/data/dataset.hpp"
#include "procnoise/eval/metrics.hpp"
#include "procnoise/image/perturbation.hpp"

namespace procnoise::eval {

struct EvalOptions {
  /// Images per classifier call.
  std::size_t batch_size = 64;
  /// Threads used to build perturbed / defended images.
  int jobs = 1;
  /// Ablation: reseed the noise per image (seed + image index) instead of
  /// sharing one perturbation across the dataset.
  bool per_image_seed = false;
  /// Called once per finished record, in completion order.
  std::function<void(const EvalRecord&)> on_record;
};

/// Optional input transform applied to clean and perturbed images alike
/// right before classification (a defense stage).
using ImageTransform = std::function<ImageTensor(const ImageTensor&)>;

/// Raised when classification fails mid-run. Carries every record finished
/// before the failure.
class PartialEvalError : public std::runtime_error {
 public:
  PartialEvalError(const std::string& what, std::vector<EvalRecord> completed)
      : std::runtime_error(what), completed_(std::move(completed)) {}
  const std::vector<EvalRecord>& completed() const { return completed_; }

 private:
  std::vector<EvalRecord> completed_;
};

/// Generic pipeline: for every image x build x + delta (one delta per image
/// shape, shared across the dataset), optionally transform both x and
/// x + delta, classify both, and assemble the report. Batches are spread
/// over `handles`, one thread per handle.
EvalReport run_eval_pipeline(const data::LabeledDataset& dataset,
                             const PerturbationSpec& spec,
                             std::span<classifier::Classifier* const> handles,
                             const EvalOptions& options,
                             const ImageTransform& transform,
                             const std::string& transform_name);

EvalReport run_attack_eval(const data::LabeledDataset& dataset,
                           const PerturbationSpec& spec,
                           classifier::Classifier& handle,
                           const EvalOptions& options = {});

EvalReport run_attack_eval(const data::LabeledDataset& dataset,
                           const PerturbationSpec& spec,
                           std::span<classifier::Classifier* const> handles,
                           const EvalOptions& options = {});

struct SweepEntry {
  PerturbationSpec spec;
  std::optional<EvalReport> report;
  /// Failure description when report is empty.
  std::string error;
};

/// One run_attack_eval per grid entry, in grid order. A failing entry is
/// recorded and the sweep continues.
std::vector<SweepEntry> sweep(const data::LabeledDataset& dataset,
                              std::span<const PerturbationSpec> grid,
                              classifier::Classifier& handle,
                              const EvalOptions& options = {});

std::vector<SweepEntry> sweep(const data::LabeledDataset& dataset,
                              std::span<const PerturbationSpec> grid,
                              std::span<classifier::Classifier* const> handles,
                              const EvalOptions& options = {});

}  // namespace procnoise::eval

#endif  // PROCNOISE_EVAL_ATTACK_EVAL_HPP_
