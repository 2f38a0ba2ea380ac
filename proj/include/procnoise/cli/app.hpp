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

#ifndef PROCNOISE_CLI_APP_HPP_
#define PROCNOISE_CLI_APP_HPP_

#include <iosfwd>

#include "procnoise/cli/run_config.hpp"

namespace procnoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the procnoise command. Subcommands: generate, attack-eval,
/// defense-eval, sweep, and serve (an ONNX model behind the JSONL classifier
/// protocol). Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

/// Executes an already resolved configuration; writes into config.out.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace procnoise::cli

#endif  // PROCNOISE_CLI_APP_HPP_
