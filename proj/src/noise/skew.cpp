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

#include "procnoise/noise/skew.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "procnoise/error.hpp"

namespace procnoise::noise {
namespace {

void check_dims(std::span<const double> coords, const SkewConstants& c) {
  if (static_cast<int>(coords.size()) != c.n) {
    throw ParameterError("coordinate vector has " +
                         std::to_string(coords.size()) +
                         " components, skew constants are for n=" +
                         std::to_string(c.n));
  }
}

}  // namespace

SkewConstants skew_constants(int n) {
  if (n < 2 || n > 4) {
    throw ParameterError("unsupported simplex dimension " + std::to_string(n));
  }
  const double root = std::sqrt(static_cast<double>(n + 1));
  return {n, (root - 1.0) / n, (1.0 - 1.0 / root) / n};
}

std::vector<double> skew(std::span<const double> coords,
                         const SkewConstants& c) {
  check_dims(coords, c);
  const double s = std::accumulate(coords.begin(), coords.end(), 0.0) * c.f_skew;
  std::vector<double> out(coords.begin(), coords.end());
  for (double& v : out) v += s;
  return out;
}

std::vector<double> unskew(std::span<const double> coords,
                           const SkewConstants& c) {
  check_dims(coords, c);
  const double t =
      std::accumulate(coords.begin(), coords.end(), 0.0) * c.g_unskew;
  std::vector<double> out(coords.begin(), coords.end());
  for (double& v : out) v -= t;
  return out;
}

}  // namespace procnoise::noise
