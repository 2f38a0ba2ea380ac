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

#include "procnoise/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <unordered_set>

#include "procnoise/data/png_io.hpp"
#include "procnoise/error.hpp"

namespace procnoise::data {

LabeledDataset::LabeledDataset(std::vector<LabeledImage> items, int class_count)
    : items_(std::move(items)), class_count_(class_count) {
  if (items_.empty()) throw FormatError("dataset is empty");
  if (class_count_ < 1) throw ParameterError("class_count must be positive");
  std::unordered_set<std::string> ids;
  for (const auto& item : items_) {
    if (item.label < 0 || item.label >= class_count_) {
      throw FormatError("label " + std::to_string(item.label) + " of '" +
                        item.id + "' outside [0, " +
                        std::to_string(class_count_) + ")");
    }
    if (!ids.insert(item.id).second) {
      throw FormatError("duplicate image id '" + item.id + "'");
    }
  }
}

LabeledDataset load_cifar10_batch(const std::filesystem::path& path,
                                  std::optional<std::size_t> limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  if (bytes.empty() || bytes.size() % kCifarRecordBytes != 0) {
    throw FormatError(path.string() + ": length " +
                      std::to_string(bytes.size()) +
                      " is not a positive multiple of 3073 bytes");
  }
  std::size_t records = bytes.size() / kCifarRecordBytes;
  if (limit) records = std::min(records, *limit);

  const std::string name = path.filename().string();
  constexpr std::size_t plane = kCifarSide * kCifarSide;
  std::vector<LabeledImage> items;
  items.reserve(records);
  for (std::size_t k = 0; k < records; ++k) {
    const std::uint8_t* rec = bytes.data() + k * kCifarRecordBytes;
    if (rec[0] > 9) {
      throw FormatError(path.string() + ": record " + std::to_string(k) +
                        " has label byte " + std::to_string(rec[0]));
    }
    std::vector<std::uint8_t> hwc(plane * 3);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t p = 0; p < plane; ++p) {
        hwc[p * 3 + c] = rec[1 + c * plane + p];
      }
    }
    items.push_back({ImageTensor(kCifarSide, kCifarSide, 3, std::move(hwc)),
                     rec[0], name + ":" + std::to_string(k)});
  }
  return LabeledDataset(std::move(items), 10);
}

void write_cifar10_batch(const LabeledDataset& dataset,
                         const std::filesystem::path& path) {
  constexpr std::size_t plane = kCifarSide * kCifarSide;
  std::vector<std::uint8_t> bytes;
  bytes.reserve(dataset.size() * kCifarRecordBytes);
  for (const auto& item : dataset.items()) {
    const ImageTensor img = item.image.to_u8();
    if (img.height() != kCifarSide || img.width() != kCifarSide ||
        img.channels() != 3 || item.label < 0 || item.label > 9) {
      throw ParameterError("item '" + item.id +
                           "' is not a 32x32 RGB image with label 0..9");
    }
    bytes.push_back(static_cast<std::uint8_t>(item.label));
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t p = 0; p < plane; ++p) bytes.push_back(img.u8()[p * 3 + c]);
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

LabeledDataset load_image_dir(const std::filesystem::path& root,
                              const std::filesystem::path& manifest,
                              std::optional<int> class_count) {
  std::ifstream in(manifest);
  if (!in) throw IoError("cannot open manifest " + manifest.string());
  std::vector<LabeledImage> items;
  int max_label = -1;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto where = manifest.string() + ":" + std::to_string(line_no);
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError(where + ": expected '<path>\\t<label>'");
    }
    const std::string rel = line.substr(0, tab);
    const std::string label_text = line.substr(tab + 1);
    int label = 0;
    const auto* first = label_text.data();
    const auto* last = first + label_text.size();
    const auto [ptr, ec] = std::from_chars(first, last, label);
    if (ec != std::errc() || ptr != last || label < 0) {
      throw FormatError(where + ": label '" + label_text +
                        "' is not a non-negative integer");
    }
    ImageTensor image = [&] {
      try {
        return load_png(root / rel);
      } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
      }
    }();
    max_label = std::max(max_label, label);
    items.push_back({std::move(image), label, rel});
  }
  if (items.empty()) {
    throw FormatError("manifest " + manifest.string() + " lists no images");
  }
  return LabeledDataset(std::move(items), class_count.value_or(max_label + 1));
}

}  // namespace procnoise::data
