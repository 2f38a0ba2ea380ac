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

#ifndef PROCNOISE_IMAGE_PERTURBATION_HPP_
#define PROCNOISE_IMAGE_PERTURBATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procnoise/image/image_tensor.hpp"
#include "procnoise/noise/noise_field.hpp"
#include "procnoise/noise/params.hpp"
#include "procnoise/noise/worley.hpp"

namespace procnoise {

enum class ChannelMode {
  /// Signed field copied into every channel.
  kReplicate,
  /// Grayscale distance texture with pure red feature pixels (RGB only).
  kWorleyRgba,
};

std::string_view to_string(ChannelMode mode);
/// Accepts "replicate" and "worley_rgba".
ChannelMode parse_channel_mode(std::string_view text);

/// Everything needed to regenerate a perturbation.
struct PerturbationSpec {
  noise::NoiseParams params;
  std::uint64_t seed = 0;
  /// l-infinity budget on the normalized [0, 1] pixel scale; 0 means
  /// natural (unperturbed) testing.
  double epsilon = 0.0;
  ChannelMode channel_mode = ChannelMode::kReplicate;

  /// worley_rgba for Worley noise, replicate otherwise.
  static PerturbationSpec with_defaults(noise::NoiseParams params,
                                        std::uint64_t seed, double epsilon);

  void validate() const;

  /// Canonical identifier of (params, seed, epsilon, channel mode).
  std::string fingerprint() const;
};

/// Additive perturbation with max |delta| <= budget, enforced on
/// construction.
class Perturbation {
 public:
  Perturbation(int height, int width, int channels, std::vector<double> delta,
               double budget);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  double budget() const { return budget_; }
  std::span<const double> delta() const { return delta_; }
  double at(int y, int x, int c) const {
    return delta_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  bool operator==(const Perturbation&) const = default;

 private:
  int height_;
  int width_;
  int channels_;
  std::vector<double> delta_;
  double budget_;
};

/// Scales a noise field into a perturbation of the requested channel count.
///
/// replicate: value s (a [0, 1] field is first mapped through 2s - 1) times
/// epsilon, in every channel.
/// worley_rgba: channel texture c in [0, 1] (m, m, m) for ordinary pixels and
/// (1, 0, 0) for feature pixels, mapped through epsilon * (2c - 1). Requires
/// `features` and channels == 3.
Perturbation field_to_perturbation(const noise::NoiseField& field,
                                   const noise::WorleyFeatureSet* features,
                                   const PerturbationSpec& spec, int channels);

/// Generates the noise for `spec` at the given shape and converts it.
Perturbation make_perturbation(const PerturbationSpec& spec, int height,
                               int width, int channels);

/// clamp(image + delta) in the image's own representation. For 8-bit images
/// each delta is converted to levels and truncated toward zero, so no sample
/// moves by more than floor(budget * 255) levels.
ImageTensor apply(const ImageTensor& image, const Perturbation& p);

/// max |delta|.
double linf_norm(const Perturbation& p);

}  // namespace procnoise

#endif  // PROCNOISE_IMAGE_PERTURBATION_HPP_
