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

#include "procnoise/classifier/protocol.hpp"

#include <openssl/evp.h>

#include <cmath>

#include "json.hpp"
#include "procnoise/data/png_io.hpp"
#include "procnoise/error.hpp"

namespace procnoise::classifier {
namespace {

using nlohmann::json;

std::string clip(std::string_view line) {
  constexpr std::size_t kMax = 120;
  return line.size() <= kMax ? std::string(line)
                             : std::string(line.substr(0, kMax)) + "...";
}

json parse_object(std::string_view line, const char* what) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw ProtocolError(std::string("malformed ") + what + " line: " +
                        clip(line));
  }
  return j;
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw FormatError("base64 length not a multiple of 4");
  std::vector<std::uint8_t> out(3 * (text.size() / 4));
  const int n = EVP_DecodeBlock(out.data(),
                                reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw FormatError("invalid base64 payload");
  // EVP_DecodeBlock counts padding as decoded zero bytes.
  std::size_t size = static_cast<std::size_t>(n);
  if (!text.empty() && text.back() == '=') --size;
  if (text.size() >= 2 && text[text.size() - 2] == '=') --size;
  out.resize(size);
  return out;
}

std::string encode_handshake(int class_count) {
  return json{{"protocol", kProtocolVersion}, {"class_count", class_count}}.dump();
}

int parse_handshake(std::string_view line) {
  const json j = parse_object(line, "handshake");
  if (!j.contains("protocol") || !j["protocol"].is_number_integer()) {
    throw ProtocolError("handshake lacks an integer \"protocol\": " + clip(line));
  }
  const int version = j["protocol"].get<int>();
  if (version != kProtocolVersion) {
    throw ProtocolError("protocol version mismatch: classifier speaks " +
                        std::to_string(version) + ", expected " +
                        std::to_string(kProtocolVersion));
  }
  if (!j.contains("class_count") || !j["class_count"].is_number_integer()) {
    throw ProtocolError("handshake lacks an integer \"class_count\": " +
                        clip(line));
  }
  const int k = j["class_count"].get<int>();
  if (k < 2) {
    throw ProtocolError("handshake class_count " + std::to_string(k) +
                        " invalid, need at least 2");
  }
  return k;
}

std::string encode_request(std::string_view id, const ImageTensor& image) {
  const auto png = data::encode_png(image);
  return json{{"id", id}, {"png_b64", base64_encode(png)}}.dump();
}

Request parse_request(std::string_view line) {
  const json j = parse_object(line, "request");
  if (!j.contains("id") || !j["id"].is_string() || !j.contains("png_b64") ||
      !j["png_b64"].is_string()) {
    throw ProtocolError("request needs string \"id\" and \"png_b64\"");
  }
  const auto bytes = base64_decode(j["png_b64"].get<std::string>());
  return {j["id"].get<std::string>(), data::decode_png(bytes)};
}

std::string encode_response(const Prediction& prediction) {
  json j{{"id", prediction.id}, {"label", prediction.label}};
  if (prediction.scores) j["scores"] = *prediction.scores;
  return j.dump();
}

Prediction parse_response(std::string_view line, int class_count) {
  const json j = parse_object(line, "response");
  if (!j.contains("id") || !j["id"].is_string()) {
    throw ProtocolError("response lacks a string \"id\": " + clip(line));
  }
  Prediction p;
  p.id = j["id"].get<std::string>();
  if (j.contains("scores") && !j["scores"].is_null()) {
    const auto& s = j["scores"];
    if (!s.is_array() || static_cast<int>(s.size()) != class_count) {
      throw ProtocolError("response \"scores\" must be an array of " +
                          std::to_string(class_count) + " numbers: " +
                          clip(line));
    }
    std::vector<double> scores;
    for (const auto& v : s) {
      if (!v.is_number()) throw ProtocolError("non-numeric score: " + clip(line));
      const double d = v.get<double>();
      if (std::isnan(d)) throw ProtocolError("NaN score: " + clip(line));
      scores.push_back(d);
    }
    p.label = argmax(scores);
    p.scores = std::move(scores);
    return p;
  }
  if (!j.contains("label") || !j["label"].is_number_integer()) {
    throw ProtocolError("response needs an integer \"label\" or \"scores\": " +
                        clip(line));
  }
  p.label = j["label"].get<int>();
  if (p.label < 0 || p.label >= class_count) {
    throw ProtocolError("response label " + std::to_string(p.label) +
                        " outside [0, " + std::to_string(class_count) + ")");
  }
  return p;
}

}  // namespace procnoise::classifier
