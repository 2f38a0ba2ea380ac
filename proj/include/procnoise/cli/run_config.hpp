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

#ifndef PROCNOISE_CLI_RUN_CONFIG_HPP_
#define PROCNOISE_CLI_RUN_CONFIG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "procnoise/defense/filters.hpp"
#include "procnoise/image/perturbation.hpp"
#include "procnoise/noise/params.hpp"

namespace procnoise::cli {

/// Bad flags or configuration. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetSource {
  /// "cifar10" or "dir".
  std::string kind = "cifar10";
  /// Batch file for cifar10, image root for dir.
  std::string path;
  /// dir only; defaults to <path>/manifest.tsv.
  std::string manifest;
  std::optional<std::size_t> limit;
  std::optional<int> class_count;
};

struct ClassifierBackend {
  /// Exactly one of command / model_file is set for evaluation commands.
  std::string command;
  std::string model_file;
  int class_count = 10;
  int input_height = 32;
  int input_width = 32;
  bool resize = false;
  std::array<double, 3> mean{0.0, 0.0, 0.0};
  std::array<double, 3> std{1.0, 1.0, 1.0};
  std::int64_t handshake_timeout_ms = 30'000;
  std::int64_t batch_timeout_ms = 300'000;
};

struct GenerateTarget {
  int height = 256;
  int width = 256;
  /// Optional PNG to perturb; its shape overrides height / width.
  std::string input;
};

/// Fully resolved run description. Serializing it and feeding it back
/// through --config reproduces the run.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<noise::NoiseParams> noises;
  std::vector<double> epsilons;
  /// Overrides the per-kind default when set.
  std::optional<ChannelMode> channel_mode;
  DatasetSource dataset;
  ClassifierBackend classifier;
  /// "" (not given), "none", or the active filter's kind.
  std::string filter_kind;
  defense::FilterSpec filter;
  std::string out = "out";
  int jobs = 1;
  std::size_t batch_size = 64;
  bool per_image_seed = false;
  GenerateTarget generate;

  /// noises x epsilons, noise-major.
  std::vector<PerturbationSpec> grid() const;
  bool has_filter() const { return !filter_kind.empty() && filter_kind != "none"; }
};

nlohmann::json config_to_json(const RunConfig& config);

/// Parses and checks a merged configuration for its "command". Missing
/// keys take defaults. Throws UsageError.
RunConfig config_from_json(const nlohmann::json& j);

nlohmann::json filter_to_json(const defense::FilterSpec& spec);
/// {"kind": "gaussian" | "median" | "bilateral", ...}. Throws UsageError.
defense::FilterSpec filter_from_json(const nlohmann::json& j);
std::string filter_kind(const defense::FilterSpec& spec);

}  // namespace procnoise::cli

#endif  // PROCNOISE_CLI_RUN_CONFIG_HPP_
