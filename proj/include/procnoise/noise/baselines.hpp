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

#ifndef PROCNOISE_NOISE_BASELINES_HPP_
#define PROCNOISE_NOISE_BASELINES_HPP_

#include <cstdint>

#include "procnoise/noise/gradient_table.hpp"
#include "procnoise/noise/noise_field.hpp"
#include "procnoise/noise/params.hpp"

namespace procnoise::noise {

/// Lattice gradient (Perlin) noise with octave summation and a sine color
/// map. Octave o samples at (x, y) * 2^o / period with amplitude 0.5^o; the
/// sum is divided by the total amplitude and by the single-octave peak
/// (sqrt(0.5) for unit gradients), then mapped through
/// sin(2 * pi * sine_frequency * raw). Range [-1, 1].
NoiseField perlin_field(int height, int width, const PerlinParams& params,
                        std::uint64_t seed);

/// Per-pixel normal draws N(mean / 255, (std / 255)^2), clamped to [-1, 1].
NoiseField gaussian_field(int height, int width, const GaussianParams& params,
                          std::uint64_t seed);

/// Per pixel: +1 with probability prob / 2, -1 with probability prob / 2,
/// 0 otherwise.
NoiseField salt_pepper_mask(int height, int width,
                            const SaltPepperParams& params, std::uint64_t seed);

/// Single-octave 2D Perlin noise at (x, y), before any normalization.
/// Exposed for tests.
double perlin_raw(double x, double y, const GradientTable& table);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_BASELINES_HPP_
