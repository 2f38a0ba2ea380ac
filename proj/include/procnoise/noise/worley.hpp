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

#ifndef PROCNOISE_NOISE_WORLEY_HPP_
#define PROCNOISE_NOISE_WORLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "procnoise/noise/noise_field.hpp"
#include "procnoise/noise/params.hpp"

namespace procnoise::noise {

/// Integer pixel position; x is the column, y the row.
struct PixelCoord {
  int x = 0;
  int y = 0;
  bool operator==(const PixelCoord&) const = default;
};

/// N distinct in-bounds feature pixels, in draw order.
class WorleyFeatureSet {
 public:
  WorleyFeatureSet(int height, int width, std::vector<PixelCoord> points);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t count() const { return points_.size(); }
  const std::vector<PixelCoord>& points() const { return points_; }

 private:
  int height_;
  int width_;
  std::vector<PixelCoord> points_;
};

/// Rejection-samples n distinct pixels from Rng(seed, kStreamWorley).
/// Requires 1 <= n <= height * width.
WorleyFeatureSet worley_feature_points(int height, int width, int n,
                                       std::uint64_t seed);

struct NearestFeature {
  double distance = 0.0;
  std::size_t index = 0;
};

/// Euclidean distance to the closest feature point, by exhaustive scan.
/// Ties resolve to the lowest index.
NearestFeature nearest_feature_distance(PixelCoord pixel,
                                        const WorleyFeatureSet& features);

/// Uniform-grid bucket index over a feature set answering the same query as
/// nearest_feature_distance() in roughly constant time per pixel.
class FeatureIndex {
 public:
  explicit FeatureIndex(const WorleyFeatureSet& features);
  NearestFeature nearest(PixelCoord pixel) const;

 private:
  const WorleyFeatureSet* features_;
  int cell_;
  int cols_;
  int rows_;
  std::vector<std::size_t> cell_start_;
  std::vector<std::size_t> cell_items_;
};

struct WorleyNoise {
  NoiseField field;
  WorleyFeatureSet features;
};

/// Nearest-feature distance at every pixel divided by its maximum over the
/// image; range [0, 1]. All zero when every pixel is a feature.
WorleyNoise worley_field(int height, int width, const WorleyParams& params,
                         std::uint64_t seed);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_WORLEY_HPP_
