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

#include "procnoise/noise/params.hpp"

#include <charconv>
#include <cmath>

#include "procnoise/error.hpp"

namespace procnoise::noise {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string format_exact(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void validate(const NoiseParams& params) {
  std::visit(
      Overloaded{
          [](const SimplexParams& p) {
            if (p.dim < 2 || p.dim > 4)
              throw ParameterError("simplex dim must be 2, 3 or 4");
            if (!(p.step >= 1.0) || !std::isfinite(p.step))
              throw ParameterError("simplex step must be >= 1");
            if (!(p.r_squared > 0.0) || !std::isfinite(p.r_squared))
              throw ParameterError("simplex r_squared must be > 0");
            if (p.gradients_2d != 8 && p.gradients_2d != 16)
              throw ParameterError("2D gradient count must be 8 or 16");
            if (!std::isfinite(p.slice[0]) || !std::isfinite(p.slice[1]))
              throw ParameterError("simplex slice must be finite");
          },
          [](const WorleyParams& p) {
            if (p.points < 1) throw ParameterError("worley points must be >= 1");
          },
          [](const PerlinParams& p) {
            if (p.octaves < 1 || p.octaves > 4)
              throw ParameterError("perlin octaves must be in [1, 4]");
            if (!(p.period > 0.0) || !std::isfinite(p.period))
              throw ParameterError("perlin period must be > 0");
            if (!std::isfinite(p.sine_frequency))
              throw ParameterError("perlin sine frequency must be finite");
          },
          [](const GaussianParams& p) {
            if (!(p.std > 0.0) || !std::isfinite(p.std))
              throw ParameterError("gaussian std must be > 0");
            if (!std::isfinite(p.mean))
              throw ParameterError("gaussian mean must be finite");
          },
          [](const SaltPepperParams& p) {
            if (!(p.prob >= 0.0 && p.prob <= 1.0))
              throw ParameterError("salt-and-pepper prob must be in [0, 1]");
          },
      },
      params);
}

std::string_view kind_name(const NoiseParams& params) {
  return std::visit(Overloaded{
                        [](const SimplexParams&) { return "simplex"; },
                        [](const WorleyParams&) { return "worley"; },
                        [](const PerlinParams&) { return "perlin"; },
                        [](const GaussianParams&) { return "gaussian"; },
                        [](const SaltPepperParams&) { return "sp"; },
                    },
                    params);
}

std::string describe(const NoiseParams& params) {
  return std::visit(
      Overloaded{
          [](const SimplexParams& p) {
            std::string s = "simplex(dim=" + std::to_string(p.dim) +
                            ",step=" + format_exact(p.step);
            if (p.dim >= 3) s += ",slice0=" + format_exact(p.slice[0]);
            if (p.dim == 4) s += ",slice1=" + format_exact(p.slice[1]);
            s += ",r2=" + format_exact(p.r_squared);
            if (p.dim == 2) s += ",grads=" + std::to_string(p.gradients_2d);
            return s + ")";
          },
          [](const WorleyParams& p) {
            return "worley(points=" + std::to_string(p.points) + ")";
          },
          [](const PerlinParams& p) {
            return "perlin(octaves=" + std::to_string(p.octaves) +
                   ",period=" + format_exact(p.period) +
                   ",freq=" + format_exact(p.sine_frequency) + ")";
          },
          [](const GaussianParams& p) {
            return "gaussian(mean=" + format_exact(p.mean) + ",std=" + format_exact(p.std) +
                   ")";
          },
          [](const SaltPepperParams& p) {
            return "sp(prob=" + format_exact(p.prob) + ")";
          },
      },
      params);
}

}  // namespace procnoise::noise
