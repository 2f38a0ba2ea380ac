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

#ifndef PROCNOISE_NOISE_RNG_HPP_
#define PROCNOISE_NOISE_RNG_HPP_

#include <cstdint>
#include <random>

namespace procnoise::noise {

/// Deterministic pseudorandom source used by every generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are not (their algorithms
/// are implementation-defined), so the bounded-integer, uniform and normal
/// draws below are implemented here to keep fields identical across
/// toolchains. The user seed is mixed with a per-purpose stream tag through
/// SplitMix64 so that, e.g., a permutation table and a Worley point set
/// generated from the same seed are not correlated.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal draw (Marsaglia polar method).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Stream tags. Stable values; changing one changes every generated field.
inline constexpr std::uint64_t kStreamPermutation = 0x7065726d;  // "perm"
inline constexpr std::uint64_t kStreamWorley = 0x776f726c;       // "worl"
inline constexpr std::uint64_t kStreamGaussian = 0x67617573;     // "gaus"
inline constexpr std::uint64_t kStreamSaltPepper = 0x73616c74;   // "salt"

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_RNG_HPP_
