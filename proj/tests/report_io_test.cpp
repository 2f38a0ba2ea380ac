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

#include <filesystem>

#include "procnoise/error.hpp"
#include "procnoise/eval/report_io.hpp"
#include "support/test_support.hpp"

namespace procnoise::eval {
namespace {

using nlohmann::json;

TEST(SpecJson, RoundTripEveryKind) {
  const std::vector<noise::NoiseParams> kinds{
      noise::SimplexParams{.dim = 3, .step = 12.5, .slice = {0.25, -2}, .r_squared = 0.6},
      noise::SimplexParams{.dim = 2, .gradients_2d = 16},
      noise::WorleyParams{77},
      noise::PerlinParams{.octaves = 2, .period = 30, .sine_frequency = 4},
      noise::GaussianParams{3, 9},
      noise::SaltPepperParams{0.25}};
  for (const auto& p : kinds) {
    const auto spec = PerturbationSpec::with_defaults(p, 123456789012345ull, 0.0465);
    const auto back = spec_from_json(spec_to_json(spec));
    EXPECT_EQ(back.fingerprint(), spec.fingerprint());
  }
}

TEST(SpecJson, DefaultsAndErrors) {
  const auto s = spec_from_json(json{{"noise", "worley"}, {"epsilon", 0.031}});
  EXPECT_EQ(std::get<noise::WorleyParams>(s.params).points, 100);
  EXPECT_EQ(s.channel_mode, ChannelMode::kWorleyRgba);
  EXPECT_THROW(spec_from_json(json{{"noise", "gabor"}}), ParameterError);
  EXPECT_THROW(spec_from_json(json{{"noise", "simplex"}, {"dim", "four"}}), ParameterError);
  EXPECT_THROW(spec_from_json(json{{"noise", "simplex"}, {"epsilon", 2}}), ParameterError);
}

SweepEntry entry(double eps, std::vector<std::array<int, 3>> rows) {
  const auto spec = PerturbationSpec::with_defaults(noise::SimplexParams{}, 1, eps);
  std::vector<EvalRecord> records;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    records.push_back({"id" + std::to_string(i), rows[i][0], rows[i][1], rows[i][2],
                       spec.fingerprint()});
  }
  return {spec, assemble_report(spec, "", records), ""};
}

TEST(SweepCsv, RowsAndFailedEntries) {
  std::vector<SweepEntry> entries{entry(0.031, {{0, 0, 1}, {1, 1, 1}, {2, 2, 2}, {3, 0, 0}})};
  SweepEntry failed{PerturbationSpec::with_defaults(noise::WorleyParams{5}, 1, 0.0465),
                    std::nullopt, "classifier crashed, \"badly\""};
  entries.push_back(failed);
  const auto csv = sweep_to_csv(entries);
  const std::string header =
      "fingerprint,epsilon,evasion_rate,robust_accuracy,clean_accuracy,n,status\n";
  ASSERT_EQ(csv.substr(0, header.size()), header);
  EXPECT_NE(csv.find(",0.031,0.5,0.5,0.75,4,ok\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find(",0.0465,,,,,\"error: classifier crashed, \"\"badly\"\"\"\n"),
            std::string::npos)
      << csv;
  // Fingerprints contain commas, so they are quoted.
  EXPECT_EQ(csv[header.size()], '"');
}

TEST(SweepJson, CarriesRecordsAndStatus) {
  std::vector<SweepEntry> entries{entry(0.0155, {{0, 0, 0}, {1, 1, 2}})};
  entries.push_back({entries[0].spec, std::nullopt, "boom"});
  const auto j = sweep_to_json(entries);
  ASSERT_EQ(j.at("reports").size(), 2u);
  const auto& ok = j["reports"][0];
  EXPECT_EQ(ok.at("status"), "ok");
  EXPECT_EQ(ok.at("n"), 2);
  EXPECT_EQ(ok.at("evasion_rate"), 0.5);
  EXPECT_EQ(ok.at("records").size(), 2u);
  EXPECT_EQ(ok.at("records")[1].at("adv_label"), 2);
  EXPECT_TRUE(ok.at("defense").is_null());
  EXPECT_EQ(j["reports"][1].at("status"), "error: boom");
  EXPECT_EQ(spec_from_json(ok.at("spec")).fingerprint(), entries[0].spec.fingerprint());
}

TEST(WriteAtomic, ReplacesContentAndLeavesNoTemporaries) {
  testing::TempDir dir;
  write_atomic(dir / "r.csv", "one\n");
  write_atomic(dir / "r.csv", "two\n");
  EXPECT_EQ(testing::read_file(dir / "r.csv"), "two\n");
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++files;
  EXPECT_EQ(files, 1);
  EXPECT_THROW(write_atomic(dir / "missing" / "r.csv", "x"), IoError);
}

}  // namespace
}  // namespace procnoise::eval
