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

#ifndef PROCNOISE_CLASSIFIER_EMBEDDED_CLASSIFIER_HPP_
#define PROCNOISE_CLASSIFIER_EMBEDDED_CLASSIFIER_HPP_

#include <array>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "procnoise/classifier/classifier.hpp"

namespace procnoise::classifier {

/// Declared input transform for the embedded backend. The model sees an
/// NCHW float tensor with value (sample / 255 - mean[c]) / std[c].
struct Preprocessing {
  int input_height = 32;
  int input_width = 32;
  int input_channels = 3;
  /// Bilinear resize to the input size; when false a size mismatch is a
  /// ShapeError.
  bool resize = false;
  std::array<double, 3> mean{0.0, 0.0, 0.0};
  std::array<double, 3> std{1.0, 1.0, 1.0};
};

struct EmbeddedConfig {
  std::filesystem::path model_file;
  int class_count = 10;
  Preprocessing preprocessing;
};

/// In-process inference on an ONNX model file via OpenCV's dnn module.
/// Calls are serialized internally.
class EmbeddedClassifier final : public Classifier {
 public:
  /// Throws ModelError if the file cannot be loaded, ParameterError for an
  /// invalid declaration.
  static std::unique_ptr<EmbeddedClassifier> open(const EmbeddedConfig& config);

  ~EmbeddedClassifier() override;

  int class_count() const override { return config_.class_count; }
  /// Throws ShapeError or ModelError.
  std::vector<Prediction> classify(std::span<const ImageRef> images) override;
  std::string describe() const override;

 private:
  struct Net;
  explicit EmbeddedClassifier(EmbeddedConfig config);

  EmbeddedConfig config_;
  std::unique_ptr<Net> net_;
  std::mutex mutex_;
};

std::unique_ptr<Classifier> open_embedded(const EmbeddedConfig& config);

/// Same contract as classify_batch, named for the embedded backend.
inline std::vector<Prediction> classify_with_embedded(
    Classifier& handle, std::span<const ImageRef> images) {
  return handle.classify(images);
}

}  // namespace procnoise::classifier

#endif  // PROCNOISE_CLASSIFIER_EMBEDDED_CLASSIFIER_HPP_
