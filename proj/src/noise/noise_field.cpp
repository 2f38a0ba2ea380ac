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

#include "procnoise/noise/noise_field.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "procnoise/error.hpp"

namespace procnoise::noise {

NoiseField::NoiseField(int height, int width, ValueRange range)
    : height_(height), width_(width), range_(range) {
  if (height < 1 || width < 1) {
    throw ParameterError("noise field dimensions must be positive, got " +
                         std::to_string(height) + "x" + std::to_string(width));
  }
  if (!(range.lo <= range.hi)) {
    throw ParameterError("noise field range is empty");
  }
  values_.assign(static_cast<std::size_t>(height) * width, 0.0);
}

bool NoiseField::within_range() const {
  return std::all_of(values_.begin(), values_.end(),
                     [this](double v) { return range_.contains(v); });
}

bool bit_identical(const NoiseField& a, const NoiseField& b) {
  if (a.height() != b.height() || a.width() != b.width() ||
      !(a.range() == b.range())) {
    return false;
  }
  const auto va = a.values();
  const auto vb = b.values();
  return std::memcmp(va.data(), vb.data(), va.size_bytes()) == 0;
}

}  // namespace procnoise::noise
