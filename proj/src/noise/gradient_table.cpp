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

#include "procnoise/noise/gradient_table.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "procnoise/error.hpp"
#include "procnoise/noise/rng.hpp"

namespace procnoise::noise {
namespace {

std::vector<double> circle_gradients(int count) {
  std::vector<double> g;
  g.reserve(2 * count);
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * k / count;
    // Snap the axis-aligned and diagonal directions so that norms and
    // symmetric entries are exact.
    double c = std::cos(a), s = std::sin(a);
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    g.push_back(c);
    g.push_back(s);
  }
  return g;
}

// All vectors with exactly one zero coordinate and +-1 elsewhere, ordered by
// zero position then sign pattern.
std::vector<double> edge_midpoints(int dim) {
  std::vector<double> g;
  for (int zero = 0; zero < dim; ++zero) {
    for (int signs = 0; signs < (1 << (dim - 1)); ++signs) {
      int bit = 0;
      for (int k = 0; k < dim; ++k) {
        if (k == zero) {
          g.push_back(0.0);
        } else {
          g.push_back((signs >> bit) & 1 ? -1.0 : 1.0);
          ++bit;
        }
      }
    }
  }
  return g;
}

}  // namespace

GradientTable GradientTable::create(int dim, std::uint64_t seed,
                                    int gradients_2d) {
  GradientTable t;
  t.dim_ = dim;
  switch (dim) {
    case 2:
      if (gradients_2d != 8 && gradients_2d != 16) {
        throw ParameterError("2D gradient count must be 8 or 16");
      }
      t.gradients_ = circle_gradients(gradients_2d);
      break;
    case 3:
    case 4:
      t.gradients_ = edge_midpoints(dim);
      break;
    default:
      throw ParameterError("unsupported gradient table dimension " +
                           std::to_string(dim));
  }

  std::array<std::uint8_t, 256> p;
  std::iota(p.begin(), p.end(), 0);
  Rng rng(seed, kStreamPermutation);
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i + 1));
    std::swap(p[i], p[j]);
  }
  for (std::size_t i = 0; i < 512; ++i) t.perm_[i] = p[i & 255];
  return t;
}

}  // namespace procnoise::noise
