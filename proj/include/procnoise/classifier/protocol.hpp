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

#ifndef PROCNOISE_CLASSIFIER_PROTOCOL_HPP_
#define PROCNOISE_CLASSIFIER_PROTOCOL_HPP_

// Newline-delimited JSON spoken over a classifier child's stdin/stdout.
//
//   child -> parent, once:  {"protocol": 1, "class_count": K}
//   parent -> child:        {"id": "...", "png_b64": "..."}
//   child -> parent:        {"id": "...", "label": k, "scores": [...]}
//
// "scores" is optional; when present the label is its argmax (lowest index
// on ties) and any "label" field is ignored.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procnoise/classifier/classifier.hpp"
#include "procnoise/image/image_tensor.hpp"

namespace procnoise::classifier {

inline constexpr int kProtocolVersion = 1;

std::string base64_encode(std::span<const std::uint8_t> bytes);
/// Throws FormatError on invalid input.
std::vector<std::uint8_t> base64_decode(std::string_view text);

std::string encode_handshake(int class_count);
/// Returns the advertised class count. Throws ProtocolError on malformed
/// JSON, a version other than kProtocolVersion, or class_count < 2.
int parse_handshake(std::string_view line);

/// Single line, no trailing newline.
std::string encode_request(std::string_view id, const ImageTensor& image);

struct Request {
  std::string id;
  ImageTensor image;
};
Request parse_request(std::string_view line);

std::string encode_response(const Prediction& prediction);
/// Throws ProtocolError on malformed lines or out-of-range labels/scores.
Prediction parse_response(std::string_view line, int class_count);

}  // namespace procnoise::classifier

#endif  // PROCNOISE_CLASSIFIER_PROTOCOL_HPP_
