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

#ifndef PROCNOISE_EVAL_METRICS_HPP_
#define PROCNOISE_EVAL_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "procnoise/image/perturbation.hpp"

namespace procnoise::eval {

struct EvalRecord {
  std::string id;
  int true_label = 0;
  int clean_label = 0;
  int adv_label = 0;
  std::string fingerprint;

  bool operator==(const EvalRecord&) const = default;
};

struct EvalCounts {
  std::size_t total = 0;
  /// adv_label != true_label (clean mistakes included).
  std::size_t evaded = 0;
  std::size_t clean_correct = 0;

  std::size_t robust() const { return total - evaded; }
  bool operator==(const EvalCounts&) const = default;
};

/// Fraction of records whose adversarial label differs from the true label.
/// Records already misclassified on the clean image count as evasions.
/// Throws ParameterError on empty input.
double evasion_rate(std::span<const EvalRecord> records);

/// 1 - evasion_rate over the same records.
double robust_accuracy(std::span<const EvalRecord> records);

EvalCounts count(std::span<const EvalRecord> records);

struct EvalReport {
  PerturbationSpec spec;
  std::string fingerprint;
  /// Defense stage description; empty for a plain attack evaluation.
  std::string defense;
  std::vector<EvalRecord> records;
  EvalCounts counts;
  double evasion_rate = 0.0;
  /// Always exactly 1 - evasion_rate.
  double robust_accuracy = 0.0;
  double clean_accuracy = 0.0;
};

EvalReport assemble_report(const PerturbationSpec& spec, std::string defense,
                           std::vector<EvalRecord> records);

}  // namespace procnoise::eval

#endif  // PROCNOISE_EVAL_METRICS_HPP_
