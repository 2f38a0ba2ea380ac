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

#include "procnoise/noise/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "procnoise/noise/gradient_table.hpp"
#include "procnoise/noise/rng.hpp"

namespace procnoise::noise {
namespace {

double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }

double corner(const GradientTable& table, std::int64_t ix, std::int64_t iy,
              double dx, double dy) {
  const std::array<std::int64_t, 2> v{ix, iy};
  const auto g = table.gradient(table.hash(v));
  return g[0] * dx + g[1] * dy;
}

}  // namespace

double perlin_raw(double x, double y, const GradientTable& table) {
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const auto ix = static_cast<std::int64_t>(fx);
  const auto iy = static_cast<std::int64_t>(fy);
  const double dx = x - fx;
  const double dy = y - fy;
  const double u = fade(dx);
  const double v = fade(dy);
  const double n00 = corner(table, ix, iy, dx, dy);
  const double n10 = corner(table, ix + 1, iy, dx - 1.0, dy);
  const double n01 = corner(table, ix, iy + 1, dx, dy - 1.0);
  const double n11 = corner(table, ix + 1, iy + 1, dx - 1.0, dy - 1.0);
  const double a = n00 + u * (n10 - n00);
  const double b = n01 + u * (n11 - n01);
  return a + v * (b - a);
}

NoiseField perlin_field(int height, int width, const PerlinParams& params,
                        std::uint64_t seed) {
  validate(NoiseParams{params});
  const auto table = GradientTable::create(2, seed);
  double amplitude_sum = 0.0;
  for (int o = 0; o < params.octaves; ++o) amplitude_sum += std::ldexp(1.0, -o);
  const double norm = 1.0 / (amplitude_sum * std::sqrt(0.5));

  NoiseField field(height, width, kSignedUnit);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double sum = 0.0;
      for (int o = 0; o < params.octaves; ++o) {
        const double freq = std::ldexp(1.0, o) / params.period;
        sum += std::ldexp(1.0, -o) * perlin_raw(x * freq, y * freq, table);
      }
      const double raw = std::clamp(sum * norm, -1.0, 1.0);
      field.at(y, x) = std::clamp(
          std::sin(2.0 * std::numbers::pi * params.sine_frequency * raw), -1.0,
          1.0);
    }
  }
  return field;
}

NoiseField gaussian_field(int height, int width, const GaussianParams& params,
                          std::uint64_t seed) {
  validate(NoiseParams{params});
  const double mean = params.mean / 255.0;
  const double std = params.std / 255.0;
  Rng rng(seed, kStreamGaussian);
  NoiseField field(height, width, kSignedUnit);
  for (double& v : field.values()) {
    v = std::clamp(mean + std * rng.normal(), -1.0, 1.0);
  }
  return field;
}

NoiseField salt_pepper_mask(int height, int width,
                            const SaltPepperParams& params, std::uint64_t seed) {
  validate(NoiseParams{params});
  const double half = params.prob / 2.0;
  Rng rng(seed, kStreamSaltPepper);
  NoiseField field(height, width, kSignedUnit);
  for (double& v : field.values()) {
    const double u = rng.uniform01();
    v = u < half ? 1.0 : (u < params.prob ? -1.0 : 0.0);
  }
  return field;
}

}  // namespace procnoise::noise
