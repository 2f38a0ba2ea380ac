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

#include "procnoise/defense/defense_eval.hpp"

namespace procnoise::defense {

eval::EvalReport run_defense_eval(const data::LabeledDataset& dataset,
                                  const PerturbationSpec& attack_spec,
                                  const FilterSpec& filter_spec,
                                  std::span<classifier::Classifier* const> handles,
                                  const eval::EvalOptions& options) {
  validate(filter_spec);
  return eval::run_eval_pipeline(
      dataset, attack_spec, handles, options,
      [filter_spec](const ImageTensor& img) { return apply_filter(img, filter_spec); },
      describe(filter_spec));
}

eval::EvalReport run_defense_eval(const data::LabeledDataset& dataset,
                                  const PerturbationSpec& attack_spec,
                                  const FilterSpec& filter_spec,
                                  classifier::Classifier& handle,
                                  const eval::EvalOptions& options) {
  classifier::Classifier* const handles[] = {&handle};
  return run_defense_eval(dataset, attack_spec, filter_spec, handles, options);
}

}  // namespace procnoise::defense
