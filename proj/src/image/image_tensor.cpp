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

#include "procnoise/image/image_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "procnoise/error.hpp"

namespace procnoise {

ImageTensor::ImageTensor(int height, int width, int channels,
                         std::vector<std::uint8_t> samples)
    : height_(height),
      width_(width),
      channels_(channels),
      type_(SampleType::kU8),
      u8_(std::move(samples)) {
  check_shape();
  if (u8_.size() != sample_count()) {
    throw ParameterError("image sample buffer has " +
                         std::to_string(u8_.size()) + " entries, expected " +
                         std::to_string(sample_count()));
  }
}

ImageTensor::ImageTensor(int height, int width, int channels,
                         std::vector<double> samples)
    : height_(height),
      width_(width),
      channels_(channels),
      type_(SampleType::kReal),
      real_(std::move(samples)) {
  check_shape();
  if (real_.size() != sample_count()) {
    throw ParameterError("image sample buffer has " +
                         std::to_string(real_.size()) + " entries, expected " +
                         std::to_string(sample_count()));
  }
  for (double v : real_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParameterError("normalized image sample outside [0, 1]");
    }
  }
}

void ImageTensor::check_shape() const {
  if (height_ < 1 || width_ < 1) {
    throw ParameterError("image dimensions must be positive");
  }
  if (channels_ != 1 && channels_ != 3) {
    throw ParameterError("image must have 1 or 3 channels, got " +
                         std::to_string(channels_));
  }
}

ImageTensor ImageTensor::filled_u8(int height, int width, int channels,
                                   std::uint8_t value) {
  return ImageTensor(height, width, channels,
                     std::vector<std::uint8_t>(
                         static_cast<std::size_t>(height) * width * channels,
                         value));
}

ImageTensor ImageTensor::filled_real(int height, int width, int channels,
                                     double value) {
  return ImageTensor(
      height, width, channels,
      std::vector<double>(static_cast<std::size_t>(height) * width * channels,
                          value));
}

ImageTensor ImageTensor::to_real() const {
  if (type_ == SampleType::kReal) return *this;
  std::vector<double> out(u8_.size());
  std::transform(u8_.begin(), u8_.end(), out.begin(),
                 [](std::uint8_t v) { return v / 255.0; });
  return ImageTensor(height_, width_, channels_, std::move(out));
}

ImageTensor ImageTensor::to_u8() const {
  if (type_ == SampleType::kU8) return *this;
  std::vector<std::uint8_t> out(real_.size());
  std::transform(real_.begin(), real_.end(), out.begin(), quantize);
  return ImageTensor(height_, width_, channels_, std::move(out));
}

bool ImageTensor::operator==(const ImageTensor& other) const {
  return same_shape(other) && type_ == other.type_ && u8_ == other.u8_ &&
         real_ == other.real_;
}

std::uint8_t quantize(double normalized) {
  const double level = std::nearbyint(normalized * 255.0);
  return static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
}

}  // namespace procnoise
