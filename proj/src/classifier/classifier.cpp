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

#include "procnoise/classifier/classifier.hpp"

#include "procnoise/error.hpp"

namespace procnoise::classifier {

int argmax(std::span<const double> scores) {
  if (scores.empty()) throw ParameterError("argmax of an empty score vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return static_cast<int>(best);
}

PurityCheck check_purity(Classifier& handle, std::span<const ImageRef> images) {
  const auto first = handle.classify(images);
  const auto second = handle.classify(images);
  PurityCheck result;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].label != second[i].label) {
      result.pure = false;
      result.unstable_ids.push_back(first[i].id);
    }
  }
  return result;
}

}  // namespace procnoise::classifier
