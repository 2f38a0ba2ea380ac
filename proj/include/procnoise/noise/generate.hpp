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

#ifndef PROCNOISE_NOISE_GENERATE_HPP_
#define PROCNOISE_NOISE_GENERATE_HPP_

#include <cstdint>
#include <optional>

#include "procnoise/noise/noise_field.hpp"
#include "procnoise/noise/params.hpp"
#include "procnoise/noise/worley.hpp"

namespace procnoise::noise {

struct GeneratedNoise {
  NoiseField field;
  /// Set for Worley noise only.
  std::optional<WorleyFeatureSet> features;
};

/// Dispatches to the generator of the active parameter alternative.
GeneratedNoise generate(const NoiseParams& params, int height, int width,
                        std::uint64_t seed);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_GENERATE_HPP_
