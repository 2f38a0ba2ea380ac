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

#ifndef PROCNOISE_NOISE_PARAMS_HPP_
#define PROCNOISE_NOISE_PARAMS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <variant>

namespace procnoise::noise {

struct SimplexParams {
  int dim = 2;
  /// Pixel stride; pixel (x, y) samples the noise at (x / step, y / step).
  double step = 40.0;
  /// Fixed extra coordinates used for dim 3 (slice[0]) and dim 4 (both).
  std::array<double, 2> slice{0.0, 0.0};
  double r_squared = 0.5;
  /// 8 or 16 unit gradients for the 2D table.
  int gradients_2d = 8;
};

struct WorleyParams {
  int points = 100;
};

struct PerlinParams {
  int octaves = 4;
  double period = 60.0;
  double sine_frequency = 36.0;
};

/// Mean and standard deviation in 8-bit pixel units.
struct GaussianParams {
  double mean = 10.0;
  double std = 50.0;
};

struct SaltPepperParams {
  double prob = 0.1;
};

using NoiseParams = std::variant<SimplexParams, WorleyParams, PerlinParams,
                                 GaussianParams, SaltPepperParams>;

/// Throws ParameterError when an invariant of the active alternative fails.
void validate(const NoiseParams& params);

/// "simplex", "worley", "perlin", "gaussian" or "sp".
std::string_view kind_name(const NoiseParams& params);

/// Canonical text form listing every parameter; distinct parameter sets
/// produce distinct strings.
std::string describe(const NoiseParams& params);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_exact(double v);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_PARAMS_HPP_
