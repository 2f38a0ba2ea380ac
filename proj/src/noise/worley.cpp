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

#include "procnoise/noise/worley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "procnoise/error.hpp"
#include "procnoise/noise/rng.hpp"

namespace procnoise::noise {
namespace {

std::int64_t squared_distance(PixelCoord a, PixelCoord b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

WorleyFeatureSet::WorleyFeatureSet(int height, int width,
                                   std::vector<PixelCoord> points)
    : height_(height), width_(width), points_(std::move(points)) {
  if (height < 1 || width < 1) {
    throw ParameterError("feature set image dimensions must be positive");
  }
  std::vector<bool> seen(static_cast<std::size_t>(height) * width, false);
  for (const auto& p : points_) {
    if (p.x < 0 || p.x >= width || p.y < 0 || p.y >= height) {
      throw ParameterError("feature point (" + std::to_string(p.x) + ", " +
                           std::to_string(p.y) + ") out of bounds");
    }
    const auto k = static_cast<std::size_t>(p.y) * width + p.x;
    if (seen[k]) throw ParameterError("duplicate feature point");
    seen[k] = true;
  }
}

WorleyFeatureSet worley_feature_points(int height, int width, int n,
                                       std::uint64_t seed) {
  if (height < 1 || width < 1) {
    throw ParameterError("image dimensions must be positive");
  }
  const auto pixels = static_cast<std::uint64_t>(height) * width;
  if (n < 1 || static_cast<std::uint64_t>(n) > pixels) {
    throw ParameterError("worley point count " + std::to_string(n) +
                         " must lie in [1, " + std::to_string(pixels) + "]");
  }
  Rng rng(seed, kStreamWorley);
  std::vector<bool> taken(pixels, false);
  std::vector<PixelCoord> points;
  points.reserve(n);
  while (points.size() < static_cast<std::size_t>(n)) {
    const int x = static_cast<int>(rng.uniform_below(width));
    const int y = static_cast<int>(rng.uniform_below(height));
    const auto k = static_cast<std::size_t>(y) * width + x;
    if (taken[k]) continue;
    taken[k] = true;
    points.push_back({x, y});
  }
  return WorleyFeatureSet(height, width, std::move(points));
}

NearestFeature nearest_feature_distance(PixelCoord pixel,
                                        const WorleyFeatureSet& features) {
  const auto& pts = features.points();
  if (pts.empty()) throw ParameterError("empty feature set");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto d2 = squared_distance(pixel, pts[i]);
    if (d2 < best) {
      best = d2;
      best_index = i;
    }
  }
  return {std::sqrt(static_cast<double>(best)), best_index};
}

FeatureIndex::FeatureIndex(const WorleyFeatureSet& features)
    : features_(&features) {
  const auto n = features.count();
  if (n == 0) throw ParameterError("empty feature set");
  // About one feature per cell on average.
  const double area = static_cast<double>(features.height()) * features.width();
  cell_ = std::max(1, static_cast<int>(std::sqrt(area / n)));
  cols_ = (features.width() + cell_ - 1) / cell_;
  rows_ = (features.height() + cell_ - 1) / cell_;

  const auto cells = static_cast<std::size_t>(cols_) * rows_;
  cell_start_.assign(cells + 1, 0);
  const auto& pts = features.points();
  for (const auto& p : pts) {
    ++cell_start_[static_cast<std::size_t>(p.y / cell_) * cols_ + p.x / cell_ + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) cell_start_[c + 1] += cell_start_[c];
  cell_items_.resize(n);
  std::vector<std::size_t> fill(cell_start_.begin(), cell_start_.end() - 1);
  // Ascending index order inside each cell.
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(pts[i].y / cell_) * cols_ +
                   pts[i].x / cell_;
    cell_items_[fill[c]++] = i;
  }
}

NearestFeature FeatureIndex::nearest(PixelCoord pixel) const {
  if (pixel.x < 0 || pixel.x >= features_->width() || pixel.y < 0 ||
      pixel.y >= features_->height()) {
    return nearest_feature_distance(pixel, *features_);
  }
  const auto& pts = features_->points();
  const int cx = pixel.x / cell_;
  const int cy = pixel.y / cell_;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t best_index = 0;
  const int max_ring = std::max(cols_, rows_);
  for (int ring = 0; ring <= max_ring; ++ring) {
    // Any pixel in a cell at Chebyshev ring distance `ring` is at least
    // (ring - 1) * cell + 1 pixels away along one axis.
    if (ring >= 2) {
      const std::int64_t gap = static_cast<std::int64_t>(ring - 1) * cell_ + 1;
      if (gap * gap > best) break;
    }
    for (int gy = cy - ring; gy <= cy + ring; ++gy) {
      if (gy < 0 || gy >= rows_) continue;
      const bool edge_row = (gy == cy - ring || gy == cy + ring);
      for (int gx = cx - ring; gx <= cx + ring; ++gx) {
        if (gx < 0 || gx >= cols_) continue;
        if (!edge_row && gx != cx - ring && gx != cx + ring) continue;
        const auto c = static_cast<std::size_t>(gy) * cols_ + gx;
        for (auto k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
          const auto i = cell_items_[k];
          const auto d2 = squared_distance(pixel, pts[i]);
          if (d2 < best || (d2 == best && i < best_index)) {
            best = d2;
            best_index = i;
          }
        }
      }
    }
  }
  return {std::sqrt(static_cast<double>(best)), best_index};
}

WorleyNoise worley_field(int height, int width, const WorleyParams& params,
                         std::uint64_t seed) {
  validate(NoiseParams{params});
  auto features = worley_feature_points(height, width, params.points, seed);
  NoiseField field(height, width, kUnit);
  const FeatureIndex index(features);
  double max_distance = 0.0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double d = index.nearest({x, y}).distance;
      field.at(y, x) = d;
      max_distance = std::max(max_distance, d);
    }
  }
  if (max_distance > 0.0) {
    for (double& v : field.values()) v /= max_distance;
  }
  return {std::move(field), std::move(features)};
}

}  // namespace procnoise::noise
