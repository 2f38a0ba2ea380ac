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

#ifndef PROCNOISE_DEFENSE_DEFENSE_EVAL_HPP_
#define PROCNOISE_DEFENSE_DEFENSE_EVAL_HPP_

#include <span>

#include "procnoise/classifier/classifier.hpp"
#include "procnoise/data/dataset.hpp"
#include "procnoise/defense/filters.hpp"
#include "procnoise/eval/attack_eval.hpp"

namespace procnoise::defense {

/// attack -> filter -> classify. Clean images pass through the same filter,
/// so clean_label reflects the defended classifier. The headline metric is
/// robust_accuracy.
eval::EvalReport run_defense_eval(const data::LabeledDataset& dataset,
                                  const PerturbationSpec& attack_spec,
                                  const FilterSpec& filter_spec,
                                  classifier::Classifier& handle,
                                  const eval::EvalOptions& options = {});

eval::EvalReport run_defense_eval(const data::LabeledDataset& dataset,
                                  const PerturbationSpec& attack_spec,
                                  const FilterSpec& filter_spec,
                                  std::span<classifier::Classifier* const> handles,
                                  const eval::EvalOptions& options = {});

}  // namespace procnoise::defense

#endif  // PROCNOISE_DEFENSE_DEFENSE_EVAL_HPP_
