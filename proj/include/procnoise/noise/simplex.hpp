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

#ifndef PROCNOISE_NOISE_SIMPLEX_HPP_
#define PROCNOISE_NOISE_SIMPLEX_HPP_

#include <cstdint>
#include <span>

#include "procnoise/noise/gradient_table.hpp"
#include "procnoise/noise/noise_field.hpp"
#include "procnoise/noise/params.hpp"
#include "procnoise/noise/skew.hpp"

namespace procnoise::noise {

/// Radial kernel of one simplex vertex:
///   max(0, r^2 - |delta|^2)^4 * <delta, gradient>.
/// Exactly 0 whenever |delta|^2 >= r^2.
double kernel_contribution(std::span<const double> delta,
                           std::span<const double> gradient, double r_squared);

/// Unscaled kernel sum at `point` (dimension = table.dim()).
///
/// The point is skewed onto the simplicial lattice, the containing simplex
/// is found by sorting the internal (fractional) coordinates in decreasing
/// order (ties: lower axis first), each of the dim + 1 vertices is hashed to
/// a gradient, and the kernel contributions of the unskewed displacements
/// are summed.
double simplex_raw(std::span<const double> point, const GradientTable& table,
                   const SkewConstants& c, double r_squared);

/// Fixed multiplier mapping simplex_raw() into [-1, 1] for the given
/// dimension and r^2.
double simplex_output_scale(int dim, double r_squared);

/// clamp(simplex_output_scale * simplex_raw, -1, 1).
double simplex_sample(std::span<const double> point, const GradientTable& table,
                      const SkewConstants& c, double r_squared);

/// Field with range [-1, 1]; pixel (x, y) holds simplex_sample at
/// (x / step, y / step [, slice0 [, slice1]]).
NoiseField simplex_field(int height, int width, const SimplexParams& params,
                         std::uint64_t seed);

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_SIMPLEX_HPP_
