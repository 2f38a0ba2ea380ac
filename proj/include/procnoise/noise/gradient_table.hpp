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

#ifndef PROCNOISE_NOISE_GRADIENT_TABLE_HPP_
#define PROCNOISE_NOISE_GRADIENT_TABLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace procnoise::noise {

/// Gradient directions plus the seeded permutation that hashes lattice
/// vertices onto them.
///
/// Gradient sets:
///   2D: 8 (or 16) unit vectors evenly spaced on the circle, starting at +x.
///   3D: the 12 cube edge midpoints, signed permutations of (1, 1, 0).
///   4D: the 32 tesseract edge midpoints, signed permutations of (1, 1, 1, 0).
///
/// The permutation is a Fisher-Yates shuffle of 0..255 driven by Rng with
/// the permutation stream tag, then duplicated to 512 entries.
class GradientTable {
 public:
  static GradientTable create(int dim, std::uint64_t seed,
                              int gradients_2d = 8);

  int dim() const { return dim_; }
  std::size_t gradient_count() const { return gradients_.size() / dim_; }

  std::span<const double> gradient(std::size_t i) const {
    return {gradients_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }

  std::span<const std::uint8_t, 512> permutation() const { return perm_; }

  /// Gradient index for an integer lattice vertex. Nested permutation
  /// lookup, last axis innermost: perm[v0 + perm[v1 + ... perm[v_{n-1}]]].
  std::size_t hash(std::span<const std::int64_t> vertex) const {
    std::size_t h = 0;
    for (std::size_t k = vertex.size(); k-- > 0;) {
      h = perm_[static_cast<std::size_t>(vertex[k] & 255) + h];
    }
    return h % gradient_count();
  }

 private:
  GradientTable() = default;

  int dim_ = 0;
  std::vector<double> gradients_;
  std::array<std::uint8_t, 512> perm_{};
};

}  // namespace procnoise::noise

#endif  // PROCNOISE_NOISE_GRADIENT_TABLE_HPP_
