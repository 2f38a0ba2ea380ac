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

#include "procnoise/defense/filters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

#include "procnoise/error.hpp"
#include "procnoise/noise/params.hpp"

namespace procnoise::defense {
namespace {

int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

std::vector<double> normalized_samples(const ImageTensor& image) {
  std::vector<double> out(image.sample_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image.normalized(i);
  return out;
}

ImageTensor like(const ImageTensor& image, const std::vector<double>& values) {
  if (image.sample_type() == SampleType::kU8) {
    std::vector<std::uint8_t> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), quantize);
    return ImageTensor(image.height(), image.width(), image.channels(),
                       std::move(out));
  }
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](double v) { return std::clamp(v, 0.0, 1.0); });
  return ImageTensor(image.height(), image.width(), image.channels(),
                     std::move(out));
}

// Huang's running-histogram median for 8-bit samples.
ImageTensor median_u8(const ImageTensor& image, int window) {
  const int h = image.height(), w = image.width(), ch = image.channels();
  const int r = window / 2;
  const int rank = window * window / 2;
  const auto in = image.u8();
  std::vector<std::uint8_t> out(image.sample_count());
  std::array<int, 256> hist;

  auto at = [&](int y, int x, int c) {
    return in[image.index(clamp_index(y, h), clamp_index(x, w), c)];
  };
  auto median_of = [&] {
    int seen = 0;
    for (int v = 0; v < 256; ++v) {
      seen += hist[v];
      if (seen > rank) return static_cast<std::uint8_t>(v);
    }
    return static_cast<std::uint8_t>(255);
  };

  for (int c = 0; c < ch; ++c) {
    for (int y = 0; y < h; ++y) {
      hist.fill(0);
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) ++hist[at(y + dy, dx, c)];
      }
      out[image.index(y, 0, c)] = median_of();
      for (int x = 1; x < w; ++x) {
        for (int dy = -r; dy <= r; ++dy) {
          --hist[at(y + dy, x - r - 1, c)];
          ++hist[at(y + dy, x + r, c)];
        }
        out[image.index(y, x, c)] = median_of();
      }
    }
  }
  return ImageTensor(h, w, ch, std::move(out));
}

ImageTensor median_real(const ImageTensor& image, int window) {
  const int h = image.height(), w = image.width(), ch = image.channels();
  const int r = window / 2;
  const auto in = image.real();
  std::vector<double> out(image.sample_count());
  std::vector<double> buf(static_cast<std::size_t>(window) * window);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        std::size_t k = 0;
        for (int dy = -r; dy <= r; ++dy) {
          for (int dx = -r; dx <= r; ++dx) {
            buf[k++] = in[image.index(clamp_index(y + dy, h),
                                      clamp_index(x + dx, w), c)];
          }
        }
        const auto mid = buf.begin() + static_cast<std::ptrdiff_t>(buf.size() / 2);
        std::nth_element(buf.begin(), mid, buf.end());
        out[image.index(y, x, c)] = *mid;
      }
    }
  }
  return ImageTensor(h, w, ch, std::move(out));
}

}  // namespace

void validate(const FilterSpec& spec) {
  if (const auto* g = std::get_if<GaussianFilter>(&spec)) {
    if (g->radius < 1) throw ParameterError("gaussian radius must be >= 1");
    if (!(g->sigma > 0.0) || !std::isfinite(g->sigma))
      throw ParameterError("gaussian sigma must be > 0");
  } else if (const auto* m = std::get_if<MedianFilter>(&spec)) {
    if (m->window < 3 || m->window % 2 == 0)
      throw ParameterError("median window must be odd and >= 3, got " +
                           std::to_string(m->window));
  } else {
    const auto& b = std::get<BilateralFilter>(spec);
    if (b.diameter < 3) throw ParameterError("bilateral diameter must be >= 3");
    if (!(b.sigma_color > 0.0) || !(b.sigma_space > 0.0))
      throw ParameterError("bilateral sigmas must be > 0");
  }
}

std::string describe(const FilterSpec& spec) {
  if (const auto* g = std::get_if<GaussianFilter>(&spec)) {
    return "gaussian(radius=" + std::to_string(g->radius) +
           ",sigma=" + noise::format_exact(g->sigma) + ")";
  }
  if (const auto* m = std::get_if<MedianFilter>(&spec)) {
    return "median(window=" + std::to_string(m->window) + ")";
  }
  const auto& b = std::get<BilateralFilter>(spec);
  return "bilateral(diameter=" + std::to_string(b.diameter) +
         ",sigma_color=" + noise::format_exact(b.sigma_color) +
         ",sigma_space=" + noise::format_exact(b.sigma_space) + ")";
}

ImageTensor gaussian_blur(const ImageTensor& image, const GaussianFilter& spec) {
  validate(FilterSpec{spec});
  const int h = image.height(), w = image.width(), ch = image.channels();
  const int r = spec.radius;
  std::vector<double> kernel(2 * r + 1);
  double total = 0.0;
  for (int k = -r; k <= r; ++k) {
    kernel[k + r] = std::exp(-(k * k) / (2.0 * spec.sigma * spec.sigma));
    total += kernel[k + r];
  }
  for (double& v : kernel) v /= total;

  const auto src = normalized_samples(image);
  std::vector<double> tmp(src.size()), dst(src.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int k = -r; k <= r; ++k) {
          acc += kernel[k + r] * src[image.index(y, clamp_index(x + k, w), c)];
        }
        tmp[image.index(y, x, c)] = acc;
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int k = -r; k <= r; ++k) {
          acc += kernel[k + r] * tmp[image.index(clamp_index(y + k, h), x, c)];
        }
        dst[image.index(y, x, c)] = acc;
      }
    }
  }
  return like(image, dst);
}

ImageTensor median_filter(const ImageTensor& image, const MedianFilter& spec) {
  validate(FilterSpec{spec});
  return image.sample_type() == SampleType::kU8 ? median_u8(image, spec.window)
                                                : median_real(image, spec.window);
}

ImageTensor bilateral_filter(const ImageTensor& image,
                             const BilateralFilter& spec) {
  validate(FilterSpec{spec});
  const int h = image.height(), w = image.width(), ch = image.channels();
  const int r = spec.diameter / 2;
  const double space_coeff = -1.0 / (2.0 * spec.sigma_space * spec.sigma_space);
  const double color_coeff = -1.0 / (2.0 * spec.sigma_color * spec.sigma_color);

  std::vector<double> spatial((2 * r + 1) * (2 * r + 1));
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      spatial[(dy + r) * (2 * r + 1) + dx + r] =
          std::exp((dx * dx + dy * dy) * space_coeff);
    }
  }

  const auto src = normalized_samples(image);
  std::vector<double> dst(src.size());
  std::array<double, 3> acc;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t center = image.index(y, x, 0);
      acc.fill(0.0);
      double weight_sum = 0.0;
      for (int dy = -r; dy <= r; ++dy) {
        const int yy = clamp_index(y + dy, h);
        for (int dx = -r; dx <= r; ++dx) {
          const std::size_t q = image.index(yy, clamp_index(x + dx, w), 0);
          double dist2 = 0.0;
          for (int c = 0; c < ch; ++c) {
            const double d = src[q + c] - src[center + c];
            dist2 += d * d;
          }
          const double wgt =
              spatial[(dy + r) * (2 * r + 1) + dx + r] * std::exp(dist2 * color_coeff);
          weight_sum += wgt;
          for (int c = 0; c < ch; ++c) acc[c] += wgt * src[q + c];
        }
      }
      for (int c = 0; c < ch; ++c) dst[center + c] = acc[c] / weight_sum;
    }
  }
  return like(image, dst);
}

ImageTensor apply_filter(const ImageTensor& image, const FilterSpec& spec) {
  return std::visit(
      [&](const auto& s) -> ImageTensor {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianFilter>) {
          return gaussian_blur(image, s);
        } else if constexpr (std::is_same_v<T, MedianFilter>) {
          return median_filter(image, s);
        } else {
          return bilateral_filter(image, s);
        }
      },
      spec);
}

}  // namespace procnoise::defense
