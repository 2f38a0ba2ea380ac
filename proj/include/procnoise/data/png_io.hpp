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

#ifndef PROCNOISE_DATA_PNG_IO_HPP_
#define PROCNOISE_DATA_PNG_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "procnoise/image/image_tensor.hpp"

namespace procnoise::data {

/// 8-bit PNG, gray or RGB. Real-valued images are quantized to the nearest
/// level first. Throws IoError when the file cannot be written.
void save_png(const ImageTensor& image, const std::filesystem::path& path);

/// Decodes any PNG to 8 bits; color images become RGB (alpha dropped),
/// grayscale stays single-channel. Throws FormatError on undecodable data.
ImageTensor load_png(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_png(const ImageTensor& image);
ImageTensor decode_png(std::span<const std::uint8_t> bytes);

}  // namespace procnoise::data

#endif  // PROCNOISE_DATA_PNG_IO_HPP_
