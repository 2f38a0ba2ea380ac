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

#include "procnoise/image/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "procnoise/error.hpp"
#include "procnoise/noise/generate.hpp"

namespace procnoise {

std::string_view to_string(ChannelMode mode) {
  return mode == ChannelMode::kReplicate ? "replicate" : "worley_rgba";
}

ChannelMode parse_channel_mode(std::string_view text) {
  if (text == "replicate") return ChannelMode::kReplicate;
  if (text == "worley_rgba") return ChannelMode::kWorleyRgba;
  throw ParameterError("unknown channel mode '" + std::string(text) + "'");
}

PerturbationSpec PerturbationSpec::with_defaults(noise::NoiseParams params,
                                                 std::uint64_t seed,
                                                 double epsilon) {
  const bool worley = std::holds_alternative<noise::WorleyParams>(params);
  return {std::move(params), seed, epsilon,
          worley ? ChannelMode::kWorleyRgba : ChannelMode::kReplicate};
}

void PerturbationSpec::validate() const {
  noise::validate(params);
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in [0, 1]");
  }
  if (channel_mode == ChannelMode::kWorleyRgba &&
      !std::holds_alternative<noise::WorleyParams>(params)) {
    throw ParameterError("worley_rgba channel mode requires worley noise");
  }
}

std::string PerturbationSpec::fingerprint() const {
  return noise::describe(params) + "|seed=" + std::to_string(seed) +
         "|eps=" + noise::format_exact(epsilon) + "|mode=" + std::string(to_string(channel_mode));
}

Perturbation::Perturbation(int height, int width, int channels,
                           std::vector<double> delta, double budget)
    : height_(height),
      width_(width),
      channels_(channels),
      delta_(std::move(delta)),
      budget_(budget) {
  if (height < 1 || width < 1 || channels < 1) {
    throw ParameterError("perturbation dimensions must be positive");
  }
  if (delta_.size() != static_cast<std::size_t>(height) * width * channels) {
    throw ParameterError("perturbation buffer size does not match its shape");
  }
  if (!(budget >= 0.0)) throw ParameterError("perturbation budget must be >= 0");
  for (double d : delta_) {
    if (!(std::abs(d) <= budget)) {
      throw ParameterError("perturbation entry exceeds its l-inf budget");
    }
  }
}

Perturbation field_to_perturbation(const noise::NoiseField& field,
                                   const noise::WorleyFeatureSet* features,
                                   const PerturbationSpec& spec, int channels) {
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in [0, 1]");
  }
  if (channels != 1 && channels != 3) {
    throw ParameterError("perturbation needs 1 or 3 channels");
  }
  const double eps = spec.epsilon;
  const int h = field.height();
  const int w = field.width();
  std::vector<double> delta(static_cast<std::size_t>(h) * w * channels);

  if (spec.channel_mode == ChannelMode::kWorleyRgba) {
    if (features == nullptr) {
      throw ParameterError("worley_rgba mode requires the feature point set");
    }
    if (channels != 3) {
      throw ParameterError("worley_rgba mode requires a 3-channel target");
    }
    if (features->height() != h || features->width() != w) {
      throw ParameterError("feature set shape does not match the field");
    }
    for (std::size_t i = 0; i < field.values().size(); ++i) {
      const double m = std::clamp(field.values()[i], 0.0, 1.0);
      const double d = eps * (2.0 * m - 1.0);
      for (int c = 0; c < 3; ++c) delta[i * 3 + c] = d;
    }
    for (const auto& p : features->points()) {
      const auto i = (static_cast<std::size_t>(p.y) * w + p.x) * 3;
      delta[i] = eps;
      delta[i + 1] = -eps;
      delta[i + 2] = -eps;
    }
  } else {
    const bool unit = field.range().lo >= 0.0;
    for (std::size_t i = 0; i < field.values().size(); ++i) {
      double s = field.values()[i];
      s = unit ? 2.0 * s - 1.0 : s;
      const double d = eps * std::clamp(s, -1.0, 1.0);
      for (int c = 0; c < channels; ++c) delta[i * channels + c] = d;
    }
  }
  return Perturbation(h, w, channels, std::move(delta), eps);
}

Perturbation make_perturbation(const PerturbationSpec& spec, int height,
                               int width, int channels) {
  spec.validate();
  const auto noise = noise::generate(spec.params, height, width, spec.seed);
  return field_to_perturbation(
      noise.field, noise.features ? &*noise.features : nullptr, spec, channels);
}

ImageTensor apply(const ImageTensor& image, const Perturbation& p) {
  if (image.height() != p.height() || image.width() != p.width() ||
      image.channels() != p.channels()) {
    throw ParameterError("perturbation shape does not match the image");
  }
  const auto delta = p.delta();
  if (image.sample_type() == SampleType::kU8) {
    std::vector<std::uint8_t> out(image.sample_count());
    const auto in = image.u8();
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double levels = std::trunc(delta[i] * 255.0);
      const double v = std::clamp(in[i] + levels, 0.0, 255.0);
      out[i] = static_cast<std::uint8_t>(v);
    }
    return ImageTensor(image.height(), image.width(), image.channels(),
                       std::move(out));
  }
  std::vector<double> out(image.sample_count());
  const auto in = image.real();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(in[i] + delta[i], 0.0, 1.0);
  }
  return ImageTensor(image.height(), image.width(), image.channels(),
                     std::move(out));
}

double linf_norm(const Perturbation& p) {
  double m = 0.0;
  for (double d : p.delta()) m = std::max(m, std::abs(d));
  return m;
}

}  // namespace procnoise
