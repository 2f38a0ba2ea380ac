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

#include "procnoise/noise/generate.hpp"

#include "procnoise/noise/baselines.hpp"
#include "procnoise/noise/simplex.hpp"

namespace procnoise::noise {

GeneratedNoise generate(const NoiseParams& params, int height, int width,
                        std::uint64_t seed) {
  if (const auto* p = std::get_if<WorleyParams>(&params)) {
    auto w = worley_field(height, width, *p, seed);
    return {std::move(w.field), std::move(w.features)};
  }
  if (const auto* p = std::get_if<SimplexParams>(&params)) {
    return {simplex_field(height, width, *p, seed), std::nullopt};
  }
  if (const auto* p = std::get_if<PerlinParams>(&params)) {
    return {perlin_field(height, width, *p, seed), std::nullopt};
  }
  if (const auto* p = std::get_if<GaussianParams>(&params)) {
    return {gaussian_field(height, width, *p, seed), std::nullopt};
  }
  return {salt_pepper_mask(height, width, std::get<SaltPepperParams>(params),
                           seed),
          std::nullopt};
}

}  // namespace procnoise::noise
