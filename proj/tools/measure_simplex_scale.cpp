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

// Prints 1 / max|simplex_raw| over uniformly random sample points. The
// constants hard-coded in src/noise/simplex.cpp come from this program with
// its default arguments.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "procnoise/noise/rng.hpp"
#include "procnoise/noise/simplex.hpp"

int main(int argc, char** argv) {
  using namespace procnoise::noise;
  const long samples = argc > 1 ? std::atol(argv[1]) : 10'000'000L;
  for (double r2 : {0.5, 0.6}) {
    for (int dim = 2; dim <= 4; ++dim) {
      const auto c = skew_constants(dim);
      double peak = 0.0;
      Rng rng(2024, dim);
      auto table = GradientTable::create(dim, 0);
      // Fresh permutation every 1e5 samples so table-specific extremes
      // do not dominate.
      for (long i = 0; i < samples; ++i) {
        if (i % 100000 == 0) table = GradientTable::create(dim, i + dim);
        std::array<double, 4> p;
        for (int k = 0; k < dim; ++k) p[k] = rng.uniform01() * 256.0;
        const double v = simplex_raw({p.data(), static_cast<size_t>(dim)},
                                     table, c, r2);
        peak = std::max(peak, std::abs(v));
      }
      std::printf("dim=%d r2=%.1f max|raw|=%.17g scale=%.17g\n", dim, r2, peak,
                  1.0 / peak);
    }
  }
  return 0;
}
