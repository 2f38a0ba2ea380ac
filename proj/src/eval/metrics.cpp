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

#include "procnoise/eval/metrics.hpp"

#include "procnoise/error.hpp"

namespace procnoise::eval {

EvalCounts count(std::span<const EvalRecord> records) {
  EvalCounts c;
  c.total = records.size();
  for (const auto& r : records) {
    if (r.adv_label != r.true_label) ++c.evaded;
    if (r.clean_label == r.true_label) ++c.clean_correct;
  }
  return c;
}

double evasion_rate(std::span<const EvalRecord> records) {
  if (records.empty()) throw ParameterError("evasion rate of an empty record set");
  const auto c = count(records);
  return static_cast<double>(c.evaded) / static_cast<double>(c.total);
}

double robust_accuracy(std::span<const EvalRecord> records) {
  // 1 - e with e in [0, 1] rounds so that (1 - e) + e == 1 exactly.
  return 1.0 - evasion_rate(records);
}

EvalReport assemble_report(const PerturbationSpec& spec, std::string defense,
                           std::vector<EvalRecord> records) {
  EvalReport r{spec, spec.fingerprint(), std::move(defense), std::move(records),
               {}, 0.0, 0.0, 0.0};
  r.counts = count(r.records);
  r.evasion_rate = evasion_rate(r.records);
  r.robust_accuracy = 1.0 - r.evasion_rate;
  r.clean_accuracy = static_cast<double>(r.counts.clean_correct) /
                     static_cast<double>(r.counts.total);
  return r;
}

}  // namespace procnoise::eval
