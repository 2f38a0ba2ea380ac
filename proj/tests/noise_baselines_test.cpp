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

#include <gtest/gtest.h>

#include <cmath>

#include "procnoise/noise/baselines.hpp"
#include "procnoise/noise/generate.hpp"
#include "procnoise/noise/simplex.hpp"

namespace procnoise::noise {
namespace {

double mean_adjacent_difference(const NoiseField& f) {
  double s = 0.0;
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 1; x < f.width(); ++x) s += std::abs(f.at(y, x) - f.at(y, x - 1));
  }
  return s / (f.height() * (f.width() - 1.0));
}

TEST(Perlin, DeterministicAndInRange) {
  for (int octaves = 1; octaves <= 4; ++octaves) {
    const PerlinParams p{.octaves = octaves};
    const auto a = perlin_field(64, 80, p, 3);
    EXPECT_TRUE(bit_identical(a, perlin_field(64, 80, p, 3)));
    EXPECT_TRUE(a.within_range());
    EXPECT_EQ(a.range(), kSignedUnit);
  }
}

// Adjacent-pixel change relative to the field's spread; independent of the
// amplitude normalization across octaves.
double relative_roughness(const NoiseField& f) {
  double mean = 0.0;
  for (double v : f.values()) mean += v;
  mean /= f.values().size();
  double var = 0.0;
  for (double v : f.values()) var += (v - mean) * (v - mean);
  return mean_adjacent_difference(f) / std::sqrt(var / f.values().size());
}

// Extra octaves add short-wavelength energy. A low sine frequency keeps the
// map close to linear so the octave sum shows through.
TEST(Perlin, MoreOctavesRougher) {
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    const PerlinParams one{.octaves = 1, .sine_frequency = 0.1},
        four{.octaves = 4, .sine_frequency = 0.1};
    EXPECT_GT(relative_roughness(perlin_field(128, 128, four, seed)),
              1.5 * relative_roughness(perlin_field(128, 128, one, seed)));
  }
}

TEST(Perlin, RawVanishesOnLattice) {
  const auto t = GradientTable::create(2, 4);
  for (int i = -5; i < 5; ++i) {
    for (int j = -5; j < 5; ++j) EXPECT_EQ(perlin_raw(i, j, t), 0.0);
  }
}

TEST(Gaussian, DegenerateStdIsConstant) {
  const auto f = gaussian_field(32, 32, {10.0, 1e-9}, 4);
  for (double v : f.values()) EXPECT_NEAR(v, 10.0 / 255.0, 1e-9);
}

TEST(Gaussian, SampleMeanWithinThreeStandardErrors) {
  const int side = 1000;  // 10^6 pixels
  const GaussianParams p{};
  const auto f = gaussian_field(side, side, p, 12);
  double s = 0.0;
  for (double v : f.values()) s += v;
  const double n = double(side) * side;
  // Clamping at +-1 is ~5 sigma away at these settings, so the unclamped
  // standard error applies.
  const double se = (p.std / 255.0) / std::sqrt(n);
  EXPECT_NEAR(s / n, p.mean / 255.0, 3 * se);
}

TEST(Gaussian, DeterministicInRange) {
  const auto a = gaussian_field(40, 40, {10, 200}, 5);
  EXPECT_TRUE(bit_identical(a, gaussian_field(40, 40, {10, 200}, 5)));
  EXPECT_TRUE(a.within_range());
  bool clipped = false;
  for (double v : a.values()) clipped = clipped || std::abs(v) == 1.0;
  EXPECT_TRUE(clipped);
}

TEST(SaltPepper, Extremes) {
  for (double v : salt_pepper_mask(50, 50, {0.0}, 1).values()) EXPECT_EQ(v, 0.0);
  for (double v : salt_pepper_mask(50, 50, {1.0}, 1).values()) EXPECT_NE(v, 0.0);
}

TEST(SaltPepper, ValuesAndRate) {
  const int side = 1000;
  const auto f = salt_pepper_mask(side, side, {0.1}, 9);
  const double n = double(side) * side;
  double nonzero = 0, salt = 0;
  for (double v : f.values()) {
    ASSERT_TRUE(v == 0.0 || v == 1.0 || v == -1.0);
    nonzero += v != 0.0;
    salt += v == 1.0;
  }
  const double se = std::sqrt(0.1 * 0.9 / n);
  EXPECT_NEAR(nonzero / n, 0.1, 3 * se);
  const double se_half = std::sqrt(0.05 * 0.95 / n);
  EXPECT_NEAR(salt / n, 0.05, 3 * se_half);
}

TEST(Generate, DispatchesAndKeepsFeatures) {
  const auto w = generate(WorleyParams{20}, 30, 30, 1);
  ASSERT_TRUE(w.features.has_value());
  EXPECT_EQ(w.features->count(), 20u);
  const auto s = generate(SimplexParams{}, 30, 30, 1);
  EXPECT_FALSE(s.features.has_value());
  EXPECT_TRUE(bit_identical(s.field, simplex_field(30, 30, SimplexParams{}, 1)));
  EXPECT_TRUE(bit_identical(generate(PerlinParams{}, 9, 9, 2).field,
                            perlin_field(9, 9, PerlinParams{}, 2)));
  EXPECT_TRUE(bit_identical(generate(SaltPepperParams{}, 9, 9, 2).field,
                            salt_pepper_mask(9, 9, SaltPepperParams{}, 2)));
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate(WorleyParams{0}, 9, 9, 1), std::invalid_argument);
  EXPECT_THROW(generate(GaussianParams{0, -1}, 9, 9, 1), std::invalid_argument);
}

}  // namespace
}  // namespace procnoise::noise
