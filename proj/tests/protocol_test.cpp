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

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "procnoise/classifier/classifier.hpp"
#include "procnoise/classifier/protocol.hpp"
#include "procnoise/classifier/subprocess_classifier.hpp"
#include "procnoise/error.hpp"
#include "support/test_support.hpp"

namespace procnoise::classifier {
namespace {

TEST(Base64, KnownVectors) {
  auto enc = [](std::string s) {
    return base64_encode(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  };
  EXPECT_EQ(enc(""), "");
  EXPECT_EQ(enc("f"), "Zg==");
  EXPECT_EQ(enc("fo"), "Zm8=");
  EXPECT_EQ(enc("foo"), "Zm9v");
  EXPECT_EQ(enc("foobar"), "Zm9vYmFy");
  const auto d = base64_decode("Zm9vYg==");
  EXPECT_EQ(std::string(d.begin(), d.end()), "foob");
  EXPECT_TRUE(base64_decode("").empty());
}

TEST(Base64, RoundTripAndErrors) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 0; n < 64; ++n) {
    std::vector<std::uint8_t> b(n);
    for (auto& v : b) v = static_cast<std::uint8_t>(rng());
    EXPECT_EQ(base64_decode(base64_encode(b)), b);
  }
  EXPECT_THROW(base64_decode("abc"), FormatError);
  EXPECT_THROW(base64_decode("a$c="), FormatError);
}

TEST(Handshake, Parse) {
  EXPECT_EQ(parse_handshake(encode_handshake(10)), 10);
  EXPECT_EQ(parse_handshake(R"({"protocol": 1, "class_count": 1000})"), 1000);
  EXPECT_THROW(parse_handshake(R"({"protocol": 2, "class_count": 10})"), ProtocolError);
  EXPECT_THROW(parse_handshake(R"({"protocol": 1, "class_count": 1})"), ProtocolError);
  EXPECT_THROW(parse_handshake(R"({"class_count": 10})"), ProtocolError);
  EXPECT_THROW(parse_handshake("hello"), ProtocolError);
}

TEST(Request, RoundTripCarriesImage) {
  std::mt19937_64 rng(2);
  const auto img = testing::random_u8_image(9, 4, 3, rng);
  const auto line = encode_request("batch:3", img);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j.at("id"), "batch:3");
  EXPECT_TRUE(j.at("png_b64").is_string());
  const auto r = parse_request(line);
  EXPECT_EQ(r.id, "batch:3");
  EXPECT_EQ(r.image, img);
}

TEST(Response, LabelOnly) {
  const auto p = parse_response(R"({"id": "a", "label": 3})", 10);
  EXPECT_EQ(p.id, "a");
  EXPECT_EQ(p.label, 3);
  EXPECT_FALSE(p.scores);
}

TEST(Response, ScoresDecideLabel) {
  EXPECT_EQ(parse_response(R"({"id":"a","scores":[0.2,0.2,0.6]})", 3).label, 2);
  EXPECT_EQ(parse_response(R"({"id":"a","scores":[0.5,0.5]})", 2).label, 0);
  EXPECT_EQ(parse_response(R"({"id":"a","label":1,"scores":[0.9,0.1]})", 2).label, 0);
}

TEST(Response, Malformed) {
  EXPECT_THROW(parse_response("nope", 10), ProtocolError);
  EXPECT_THROW(parse_response(R"({"label": 1})", 10), ProtocolError);
  EXPECT_THROW(parse_response(R"({"id": "a"})", 10), ProtocolError);
  EXPECT_THROW(parse_response(R"({"id": "a", "label": 10})", 10), ProtocolError);
  EXPECT_THROW(parse_response(R"({"id": "a", "label": -1})", 10), ProtocolError);
  EXPECT_THROW(parse_response(R"({"id": "a", "scores": [1, 2]})", 3), ProtocolError);
  EXPECT_THROW(parse_response(R"({"id": "a", "scores": ["x", 2]})", 2), ProtocolError);
}

TEST(Response, EncodeRoundTrip) {
  Prediction p{"img 7", 4, std::vector<double>{0, 0, 0, 0, 1}};
  EXPECT_EQ(parse_response(encode_response(p), 5), p);
  Prediction q{"x", 1, std::nullopt};
  EXPECT_EQ(parse_response(encode_response(q), 5), q);
}

TEST(Argmax, LowestIndexWinsTies) {
  EXPECT_EQ(argmax(std::vector<double>{0.2, 0.2, 0.6}), 2);
  EXPECT_EQ(argmax(std::vector<double>{0.5, 0.5}), 0);
  EXPECT_EQ(argmax(std::vector<double>{-1, 3, 3, 2}), 1);
  EXPECT_THROW(argmax(std::vector<double>{}), ParameterError);
}

TEST(SplitCommand, QuotesAndEscapes) {
  using V = std::vector<std::string>;
  EXPECT_EQ(split_command("a b  c"), (V{"a", "b", "c"}));
  EXPECT_EQ(split_command(R"(run "two words" 'single $x' back\ slash)"),
            (V{"run", "two words", "single $x", "back slash"}));
  EXPECT_EQ(split_command(R"(x "" y)"), (V{"x", "", "y"}));
  EXPECT_THROW(split_command("a 'b"), ParameterError);
}

}  // namespace
}  // namespace procnoise::classifier
