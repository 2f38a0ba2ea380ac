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

#ifndef PROCNOISE_IMAGE_IMAGE_TENSOR_HPP_
#define PROCNOISE_IMAGE_IMAGE_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace procnoise {

enum class SampleType { kU8, kReal };

/// Channel interpretation. Samples are always stored interleaved (HWC).
enum class ColorLayout { kGray, kRgb };

/// H x W x C image holding either 8-bit samples in [0, 255] or normalized
/// reals in [0, 1].
class ImageTensor {
 public:
  ImageTensor(int height, int width, int channels,
              std::vector<std::uint8_t> samples);
  ImageTensor(int height, int width, int channels, std::vector<double> samples);

  static ImageTensor filled_u8(int height, int width, int channels,
                               std::uint8_t value);
  static ImageTensor filled_real(int height, int width, int channels,
                                 double value);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  SampleType sample_type() const { return type_; }
  ColorLayout layout() const {
    return channels_ == 3 ? ColorLayout::kRgb : ColorLayout::kGray;
  }
  std::size_t sample_count() const {
    return static_cast<std::size_t>(height_) * width_ * channels_;
  }
  std::size_t index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }
  bool same_shape(const ImageTensor& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  /// Only valid for kU8 / kReal respectively.
  std::span<const std::uint8_t> u8() const { return u8_; }
  std::span<std::uint8_t> u8() { return u8_; }
  std::span<const double> real() const { return real_; }
  std::span<double> real() { return real_; }

  /// Sample on the [0, 1] scale regardless of representation.
  double normalized(std::size_t i) const {
    return type_ == SampleType::kU8 ? u8_[i] / 255.0 : real_[i];
  }
  double normalized(int y, int x, int c) const {
    return normalized(index(y, x, c));
  }

  ImageTensor to_real() const;
  /// Rounds to the nearest level.
  ImageTensor to_u8() const;

  bool operator==(const ImageTensor& other) const;

 private:
  void check_shape() const;

  int height_;
  int width_;
  int channels_;
  SampleType type_;
  std::vector<std::uint8_t> u8_;
  std::vector<double> real_;
};

/// Nearest 8-bit level of a normalized value, clamped to [0, 255].
std::uint8_t quantize(double normalized);

}  // namespace procnoise

#endif  // PROCNOISE_IMAGE_IMAGE_TENSOR_HPP_
