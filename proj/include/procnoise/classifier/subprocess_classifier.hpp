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

#ifndef PROCNOISE_CLASSIFIER_SUBPROCESS_CLASSIFIER_HPP_
#define PROCNOISE_CLASSIFIER_SUBPROCESS_CLASSIFIER_HPP_

#include <sys/types.h>

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "procnoise/classifier/classifier.hpp"

namespace procnoise::classifier {

struct SubprocessConfig {
  /// argv[0] is looked up on PATH.
  std::vector<std::string> argv;
  std::chrono::milliseconds handshake_timeout{30'000};
  std::chrono::milliseconds batch_timeout{300'000};
};

/// Splits a command line on whitespace, honoring single and double quotes
/// and backslash escapes. No other shell syntax is interpreted.
std::vector<std::string> split_command(std::string_view command);

/// Classifier running as a child process speaking the JSONL protocol of
/// protocol.hpp. One batch in flight at a time.
///
/// Opening a handle sets SIGPIPE to SIG_IGN for the process so that a dead
/// child surfaces as an error instead of terminating the caller.
class SubprocessClassifier final : public Classifier {
 public:
  /// Spawns the child and waits for its handshake. Throws SpawnError,
  /// TimeoutError or ProtocolError.
  static std::unique_ptr<SubprocessClassifier> open(const SubprocessConfig& config);

  ~SubprocessClassifier() override;
  SubprocessClassifier(const SubprocessClassifier&) = delete;
  SubprocessClassifier& operator=(const SubprocessClassifier&) = delete;

  int class_count() const override { return class_count_; }
  /// Throws ChildCrashError, ProtocolError or TimeoutError. After any error
  /// the handle is unusable.
  std::vector<Prediction> classify(std::span<const ImageRef> images) override;
  std::string describe() const override;

 private:
  SubprocessClassifier(SubprocessConfig config, pid_t pid, int to_child,
                       int from_child);

  /// Next complete line from the child, or nullopt on EOF.
  std::optional<std::string> read_line(
      std::chrono::steady_clock::time_point deadline, const char* phase);
  bool fill_buffer(std::chrono::steady_clock::time_point deadline,
                   const char* phase);
  std::string exit_status_text();
  void shutdown();

  SubprocessConfig config_;
  pid_t pid_;
  int to_child_;
  int from_child_;
  int class_count_ = 0;
  bool broken_ = false;
  std::string read_buffer_;
};

/// Convenience wrapper around SubprocessClassifier::open.
std::unique_ptr<Classifier> open_subprocess(const SubprocessConfig& config);

}  // namespace procnoise::classifier

#endif  // PROCNOISE_CLASSIFIER_SUBPROCESS_CLASSIFIER_HPP_
