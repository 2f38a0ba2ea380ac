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

#ifndef PROCNOISE_NOISE_NOISE_FIELD_HPP_
#define PROCNOISE_NOISE_NOISE_FIELD_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace procnoise::noise {

/// Closed interval [lo, hi].
struct ValueRange {
  double lo = -1.0;
  double hi = 1.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
  bool operator==(const ValueRange&) const = default;
};

inline constexpr ValueRange kSignedUnit{-1.0, 1.0};
inline constexpr ValueRange kUnit{0.0, 1.0};

/// H x W grid of noise values, row-major (row = y, column = x).
class NoiseField {
 public:
  NoiseField(int height, int width, ValueRange range);

  int height() const { return height_; }
  int width() const { return width_; }
  ValueRange range() const { return range_; }

  double at(int y, int x) const { return values_[index(y, x)]; }
  double& at(int y, int x) { return values_[index(y, x)]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// True iff every value lies inside range().
  bool within_range() const;

 private:
  std::size_t index(int y, int x) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int height_;
  int width_;
  ValueRange range_;
  std::vector<double> values_;
};

/// Bitwise equality of shape, range and every stored value.
bool bit_identical(const NoiseField& a, const NoiseField& b);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_NOISE_FIELD_HPP_
