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

#ifndef PROCNOISE_CLASSIFIER_CLASSIFIER_HPP_
#define PROCNOISE_CLASSIFIER_CLASSIFIER_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "procnoise/image/image_tensor.hpp"

namespace procnoise::classifier {

struct Prediction {
  std::string id;
  int label = 0;
  std::optional<std::vector<double>> scores;

  bool operator==(const Prediction&) const = default;
};

/// Non-owning (id, image) pair submitted for classification.
struct ImageRef {
  std::string id;
  const ImageTensor* image = nullptr;
};

/// Index of the largest score; the lowest index wins ties.
int argmax(std::span<const double> scores);

/// An image classifier reached through a fixed contract: one Prediction per
/// input, in input order, labels in [0, class_count()).
///
/// Handles are movable between threads but not safe for concurrent use.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual int class_count() const = 0;
  virtual std::vector<Prediction> classify(std::span<const ImageRef> images) = 0;
  /// Human-readable backend and preprocessing description.
  virtual std::string describe() const = 0;
};

/// Same contract as Classifier::classify.
inline std::vector<Prediction> classify_batch(Classifier& handle,
                                              std::span<const ImageRef> images) {
  return handle.classify(images);
}

struct PurityCheck {
  bool pure = true;
  /// Ids whose label differed between the two submissions.
  std::vector<std::string> unstable_ids;
};

/// Submits `images` twice and compares labels. A mismatch is reported, not
/// thrown: randomized defenses are legitimately impure.
PurityCheck check_purity(Classifier& handle, std::span<const ImageRef> images);

}  // namespace procnoise::classifier

#endif  // PROCNOISE_CLASSIFIER_CLASSIFIER_HPP_
