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
#include <random>

#include "procnoise/error.hpp"
#include "procnoise/image/perturbation.hpp"
#include "procnoise/noise/generate.hpp"
#include "support/test_support.hpp"

namespace procnoise {
namespace {

using noise::NoiseField;

NoiseField constant_field(int h, int w, double v, noise::ValueRange r = noise::kSignedUnit) {
  NoiseField f(h, w, r);
  for (auto& x : f.values()) x = v;
  return f;
}

PerturbationSpec simplex_spec(double eps) {
  return PerturbationSpec::with_defaults(noise::SimplexParams{}, 1, eps);
}

TEST(ImageTensor, Validation) {
  EXPECT_THROW(ImageTensor(0, 3, 3, std::vector<std::uint8_t>{}), ParameterError);
  EXPECT_THROW(ImageTensor(2, 2, 2, std::vector<std::uint8_t>(8)), ParameterError);
  EXPECT_THROW(ImageTensor(1, 1, 1, std::vector<double>{1.5}), ParameterError);
  EXPECT_THROW(ImageTensor(1, 1, 1, std::vector<double>{-0.1}), ParameterError);
  EXPECT_THROW(ImageTensor(2, 2, 1, std::vector<std::uint8_t>(3)), ParameterError);
  EXPECT_EQ(ImageTensor::filled_u8(2, 3, 3, 7).layout(), ColorLayout::kRgb);
  EXPECT_EQ(ImageTensor::filled_u8(2, 3, 1, 7).layout(), ColorLayout::kGray);
}

TEST(ImageTensor, RepresentationConversions) {
  std::mt19937_64 rng(1);
  const auto img = testing::random_u8_image(5, 7, 3, rng);
  EXPECT_EQ(img.to_real().to_u8(), img);
  EXPECT_EQ(img.normalized(2, 3, 1), img.u8()[img.index(2, 3, 1)] / 255.0);
  EXPECT_EQ(quantize(0.5), 128);
  EXPECT_EQ(quantize(-3.0), 0);
  EXPECT_EQ(quantize(7.0), 255);
}

TEST(PerturbationSpec, Validation) {
  EXPECT_NO_THROW(simplex_spec(0.0).validate());
  EXPECT_NO_THROW(simplex_spec(1.0).validate());
  EXPECT_THROW(simplex_spec(1.5).validate(), ParameterError);
  EXPECT_THROW(simplex_spec(-0.01).validate(), ParameterError);
  EXPECT_THROW(simplex_spec(NAN).validate(), ParameterError);
  auto s = simplex_spec(0.1);
  s.channel_mode = ChannelMode::kWorleyRgba;
  EXPECT_THROW(s.validate(), ParameterError);
}

TEST(PerturbationSpec, DefaultsAndFingerprint) {
  EXPECT_EQ(PerturbationSpec::with_defaults(noise::WorleyParams{}, 0, 0.1).channel_mode,
            ChannelMode::kWorleyRgba);
  EXPECT_EQ(simplex_spec(0.1).channel_mode, ChannelMode::kReplicate);
  EXPECT_NE(simplex_spec(0.031).fingerprint(), simplex_spec(0.0465).fingerprint());
  auto a = simplex_spec(0.031), b = a;
  b.seed = 2;
  EXPECT_NE(a.fingerprint(), b.fingerprint());
  EXPECT_EQ(a.fingerprint(), simplex_spec(0.031).fingerprint());
}

TEST(Perturbation, ConstructorEnforcesBudget) {
  EXPECT_THROW(Perturbation(1, 1, 1, {0.05}, 0.04), ParameterError);
  EXPECT_THROW(Perturbation(1, 1, 1, {NAN}, 0.04), ParameterError);
  EXPECT_THROW(Perturbation(1, 2, 1, {0.0}, 0.04), ParameterError);
  EXPECT_NO_THROW(Perturbation(1, 1, 1, {-0.04}, 0.04));
}

TEST(FieldToPerturbation, AllOnesField) {
  const auto p = field_to_perturbation(constant_field(4, 5, 1.0), nullptr,
                                       simplex_spec(0.0465), 3);
  for (double d : p.delta()) EXPECT_EQ(d, 0.0465);
  EXPECT_EQ(linf_norm(p), 0.0465);
}

TEST(FieldToPerturbation, ZeroFieldGivesZero) {
  const auto p = field_to_perturbation(constant_field(4, 5, 0.0), nullptr,
                                       simplex_spec(0.0465), 1);
  for (double d : p.delta()) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(linf_norm(p), 0.0);
}

TEST(FieldToPerturbation, UnitRangeFieldIsCentered) {
  const auto p = field_to_perturbation(constant_field(2, 2, 0.0, noise::kUnit), nullptr,
                                       simplex_spec(0.1), 1);
  for (double d : p.delta()) EXPECT_EQ(d, -0.1);
}

TEST(FieldToPerturbation, WorleyFeaturePixelsAreRed) {
  const auto w = noise::worley_field(20, 20, {15}, 4);
  const auto spec = PerturbationSpec::with_defaults(noise::WorleyParams{15}, 4, 0.031);
  const auto p = field_to_perturbation(w.field, &w.features, spec, 3);
  for (const auto& pt : w.features.points()) {
    EXPECT_EQ(p.at(pt.y, pt.x, 0), 0.031);
    EXPECT_EQ(p.at(pt.y, pt.x, 1), -0.031);
    EXPECT_EQ(p.at(pt.y, pt.x, 2), -0.031);
  }
  // Ordinary pixels are gray: identical channels, eps * (2m - 1).
  EXPECT_NEAR(p.at(0, 0, 0), 0.031 * (2 * w.field.at(0, 0) - 1), 1e-15);
  EXPECT_LE(linf_norm(p), 0.031);
}

TEST(FieldToPerturbation, WorleyModeRequiresFeaturesAndColor) {
  const auto w = noise::worley_field(8, 8, {3}, 1);
  const auto spec = PerturbationSpec::with_defaults(noise::WorleyParams{3}, 1, 0.1);
  EXPECT_THROW(field_to_perturbation(w.field, nullptr, spec, 3), ParameterError);
  EXPECT_THROW(field_to_perturbation(w.field, &w.features, spec, 1), ParameterError);
}

TEST(Apply, ZeroPerturbationIsIdentity) {
  std::mt19937_64 rng(2);
  const auto img = testing::random_u8_image(8, 8, 3, rng);
  const Perturbation zero(8, 8, 3, std::vector<double>(192, 0.0), 0.0);
  EXPECT_EQ(apply(img, zero), img);
  const auto real = testing::random_real_image(8, 8, 3, rng);
  EXPECT_EQ(apply(real, zero), real);
}

TEST(Apply, WhiteImageClampsPositiveDelta) {
  const auto white = ImageTensor::filled_u8(4, 4, 3, 255);
  const Perturbation up(4, 4, 3, std::vector<double>(48, 0.05), 0.05);
  EXPECT_EQ(apply(white, up), white);
  const auto white_real = ImageTensor::filled_real(4, 4, 3, 1.0);
  EXPECT_EQ(apply(white_real, up), white_real);
}

TEST(Apply, ShapeMismatch) {
  const auto img = ImageTensor::filled_u8(4, 4, 3, 1);
  const Perturbation p(4, 4, 1, std::vector<double>(16, 0.0), 0.0);
  EXPECT_THROW(apply(img, p), ParameterError);
}

// Every 8-bit level against a dense grid of deltas in [-eps, eps], including
// both endpoints and values just inside them.
TEST(Apply, QuantizedChangeNeverExceedsBudgetExhaustive) {
  for (double eps : {0.0155, 0.031, 0.0465, 1.0 / 255, 7.0 / 255, 0.5}) {
    const int limit = static_cast<int>(std::floor(eps * 255.0));
    std::vector<double> deltas;
    for (int k = -1000; k <= 1000; ++k) deltas.push_back(eps * k / 1000.0);
    deltas.push_back(std::nextafter(eps, 0.0));
    deltas.push_back(-std::nextafter(eps, 0.0));
    std::vector<std::uint8_t> levels(256);
    for (int v = 0; v < 256; ++v) levels[v] = static_cast<std::uint8_t>(v);
    const ImageTensor img(1, 256, 1, levels);
    for (double d : deltas) {
      const Perturbation p(1, 256, 1, std::vector<double>(256, d), eps);
      const auto out = apply(img, p);
      for (int v = 0; v < 256; ++v) {
        ASSERT_LE(std::abs(int(out.u8()[v]) - v), limit) << "eps=" << eps << " d=" << d;
      }
    }
  }
}

TEST(Apply, RealImagesStayInRangeAndBudget) {
  std::mt19937_64 rng(3);
  const auto img = testing::random_real_image(16, 16, 3, rng);
  const auto p = make_perturbation(simplex_spec(0.031), 16, 16, 3);
  const auto out = apply(img, p);
  for (std::size_t i = 0; i < img.sample_count(); ++i) {
    ASSERT_GE(out.real()[i], 0.0);
    ASSERT_LE(out.real()[i], 1.0);
    ASSERT_LE(std::abs(out.real()[i] - img.real()[i]), 0.031 + 1e-15);
  }
}

TEST(Apply, GeneratedSpecsRespectQuantizedBudget) {
  std::mt19937_64 rng(4);
  const std::vector<noise::NoiseParams> kinds{
      noise::SimplexParams{.dim = 2, .step = 4},  noise::SimplexParams{.dim = 3},
      noise::SimplexParams{.dim = 4, .step = 40}, noise::WorleyParams{50},
      noise::PerlinParams{},                      noise::GaussianParams{},
      noise::SaltPepperParams{}};
  for (const auto& params : kinds) {
    for (double eps : {0.0155, 0.031, 0.0465}) {
      const auto spec = PerturbationSpec::with_defaults(params, rng(), eps);
      const auto img = testing::random_u8_image(32, 32, 3, rng);
      const auto p = make_perturbation(spec, 32, 32, 3);
      EXPECT_LE(linf_norm(p), eps);
      const auto out = apply(img, p);
      const int limit = static_cast<int>(std::floor(eps * 255.0));
      for (std::size_t i = 0; i < img.sample_count(); ++i) {
        ASSERT_LE(std::abs(int(out.u8()[i]) - int(img.u8()[i])), limit);
      }
    }
  }
}

TEST(Apply, Deterministic) {
  std::mt19937_64 rng(5);
  const auto img = testing::random_u8_image(24, 24, 3, rng);
  const auto spec = PerturbationSpec::with_defaults(noise::WorleyParams{30}, 8, 0.0465);
  EXPECT_EQ(apply(img, make_perturbation(spec, 24, 24, 3)),
            apply(img, make_perturbation(spec, 24, 24, 3)));
}

TEST(LinfNorm, Examples) {
  EXPECT_EQ(linf_norm(Perturbation(1, 3, 1, {0, 0, 0}, 0.0)), 0.0);
  EXPECT_EQ(linf_norm(Perturbation(1, 3, 1, {0, -0.04, 0}, 0.05)), 0.04);
}

TEST(ChannelMode, ParseRoundTrip) {
  EXPECT_EQ(parse_channel_mode(to_string(ChannelMode::kReplicate)), ChannelMode::kReplicate);
  EXPECT_EQ(parse_channel_mode(to_string(ChannelMode::kWorleyRgba)), ChannelMode::kWorleyRgba);
  EXPECT_THROW(parse_channel_mode("rgb"), ParameterError);
}

}  // namespace
}  // namespace procnoise
