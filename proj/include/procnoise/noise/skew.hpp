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

#ifndef PROCNOISE_NOISE_SKEW_HPP_
#define PROCNOISE_NOISE_SKEW_HPP_

#include <span>
#include <vector>

namespace procnoise::noise {

/// Constants of the affine map between the orthogonal grid and the
/// simplicial grid in n dimensions:
///   f_skew   = (sqrt(n + 1) - 1) / n
///   g_unskew = (1 - 1 / sqrt(n + 1)) / n
struct SkewConstants {
  int n = 2;
  double f_skew = 0.0;
  double g_unskew = 0.0;
};

/// n must be 2, 3 or 4.
SkewConstants skew_constants(int n);

/// out[k] = in[k] + (sum of in) * F.
std::vector<double> skew(std::span<const double> coords, const SkewConstants& c);

/// out[k] = in[k] - (sum of in) * G. Inverse of skew().
std::vector<double> unskew(std::span<const double> coords,
                           const SkewConstants& c);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_SKEW_HPP_
