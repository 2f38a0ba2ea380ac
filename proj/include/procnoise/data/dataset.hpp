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

#ifndef PROCNOISE_DATA_DATASET_HPP_
#define PROCNOISE_DATA_DATASET_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "procnoise/image/image_tensor.hpp"

namespace procnoise::data {

struct LabeledImage {
  ImageTensor image;
  int label = 0;
  std::string id;
};

/// Non-empty, labels in [0, class_count), ids unique. Checked on
/// construction.
class LabeledDataset {
 public:
  LabeledDataset(std::vector<LabeledImage> items, int class_count);

  const std::vector<LabeledImage>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  int class_count() const { return class_count_; }
  const LabeledImage& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::vector<LabeledImage> items_;
  int class_count_;
};

inline constexpr std::size_t kCifarRecordBytes = 3073;
inline constexpr int kCifarSide = 32;

/// Reads a CIFAR-10 binary batch: records of 1 label byte followed by three
/// 32x32 row-major channel planes (R, G, B). Ids are "<file name>:<record>".
LabeledDataset load_cifar10_batch(const std::filesystem::path& path,
                                  std::optional<std::size_t> limit = {});

/// Writes 32x32 RGB 8-bit items in the same binary layout.
void write_cifar10_batch(const LabeledDataset& dataset,
                         const std::filesystem::path& path);

/// Reads a TAB-separated manifest of "<relative path>\t<label>" lines
/// (relative to `root`) and decodes each PNG. Ids are the relative paths.
/// class_count defaults to max label + 1.
LabeledDataset load_image_dir(const std::filesystem::path& root,
                              const std::filesystem::path& manifest,
                              std::optional<int> class_count = {});

}  // namespace procnoise::data

#endif  // PROCNOISE_DATA_DATASET_HPP_
