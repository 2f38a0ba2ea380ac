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

#ifndef PROCNOISE_DEFENSE_FILTERS_HPP_
#define PROCNOISE_DEFENSE_FILTERS_HPP_

#include <string>
#include <variant>

#include "procnoise/image/image_tensor.hpp"

namespace procnoise::defense {

struct GaussianFilter {
  int radius = 2;
  double sigma = 1.0;
};

struct MedianFilter {
  /// Odd, >= 3.
  int window = 3;
};

struct BilateralFilter {
  /// Square window of side 2 * (diameter / 2) + 1.
  int diameter = 5;
  /// Range sigma on the normalized [0, 1] scale.
  double sigma_color = 0.1;
  /// Spatial sigma in pixels.
  double sigma_space = 2.0;
};

using FilterSpec = std::variant<GaussianFilter, MedianFilter, BilateralFilter>;

/// Throws ParameterError.
void validate(const FilterSpec& spec);
std::string describe(const FilterSpec& spec);

// All filters use clamp-to-edge borders and return an image of the input's
// shape and sample type (8-bit results are rounded to the nearest level).

/// Separable Gaussian convolution per channel, kernel normalized to sum 1.
ImageTensor gaussian_blur(const ImageTensor& image, const GaussianFilter& spec);

/// Per-channel sliding-window median.
ImageTensor median_filter(const ImageTensor& image, const MedianFilter& spec);

/// Spatial Gaussian times a range Gaussian on the Euclidean color distance
/// between neighbor and center, normalized per pixel.
ImageTensor bilateral_filter(const ImageTensor& image, const BilateralFilter& spec);

ImageTensor apply_filter(const ImageTensor& image, const FilterSpec& spec);

}  // namespace procnoise::defense

#endif  // PROCNOISE_DEFENSE_FILTERS_HPP_
