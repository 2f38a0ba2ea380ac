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

#ifndef PROCNOISE_EVAL_REPORT_IO_HPP_
#define PROCNOISE_EVAL_REPORT_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "procnoise/eval/attack_eval.hpp"
#include "procnoise/eval/metrics.hpp"
#include "procnoise/image/perturbation.hpp"

namespace procnoise::eval {

/// {"noise": kind, <kind parameters>..., "seed", "epsilon", "channel_mode"}.
nlohmann::json spec_to_json(const PerturbationSpec& spec);
/// Inverse of spec_to_json; missing kind parameters take their defaults and
/// a missing channel_mode takes the kind's default. Throws ParameterError.
PerturbationSpec spec_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const noise::NoiseParams& params);
noise::NoiseParams params_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const EvalRecord& record);
nlohmann::json report_to_json(const EvalReport& report);

/// {"reports": [...]} with a "status" per entry ("ok" or the error text).
nlohmann::json sweep_to_json(std::span<const SweepEntry> entries);

/// Header plus one row per entry:
/// fingerprint,epsilon,evasion_rate,robust_accuracy,clean_accuracy,n,status
/// Failed entries leave the rate columns empty.
std::string sweep_to_csv(std::span<const SweepEntry> entries);

/// Writes `content` to a temporary sibling file, flushes it to disk and
/// renames it over `path`. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace procnoise::eval

#endif  // PROCNOISE_EVAL_REPORT_IO_HPP_
