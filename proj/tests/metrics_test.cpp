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

#include "procnoise/error.hpp"
#include "procnoise/eval/metrics.hpp"

namespace procnoise::eval {
namespace {

std::vector<EvalRecord> make(std::initializer_list<std::array<int, 3>> rows) {
  std::vector<EvalRecord> out;
  int i = 0;
  for (const auto& r : rows) out.push_back({"r" + std::to_string(i++), r[0], r[1], r[2], "fp"});
  return out;
}

// (true, clean, adversarial) per row. Evaded rows: 2, 4 (clean mistake kept
// under attack) and 6. Row 7 is a clean mistake fixed under attack.
const auto kFixture = make({{0, 0, 0}, {1, 1, 2}, {2, 2, 2}, {3, 4, 4}, {4, 4, 4},
                            {5, 5, 6}, {6, 7, 6}, {7, 7, 7}, {8, 8, 8}, {9, 9, 9}});

TEST(Metrics, HandCountedFixture) {
  const auto c = count(kFixture);
  EXPECT_EQ(c.total, 10u);
  EXPECT_EQ(c.evaded, 3u);
  EXPECT_EQ(c.robust(), 7u);
  EXPECT_EQ(c.clean_correct, 8u);
  EXPECT_EQ(evasion_rate(kFixture), 0.3);
  EXPECT_EQ(robust_accuracy(kFixture), 0.7);
  EXPECT_EQ(evasion_rate(kFixture) + robust_accuracy(kFixture), 1.0);
}

TEST(Metrics, AllEvaded) {
  const auto r = make({{1, 1, 0}, {2, 2, 3}, {0, 0, 1}});
  EXPECT_EQ(evasion_rate(r), 1.0);
  EXPECT_EQ(robust_accuracy(r), 0.0);
}

TEST(Metrics, AllRobust) {
  const auto r = make({{1, 1, 1}, {2, 0, 2}});
  EXPECT_EQ(robust_accuracy(r), 1.0);
  EXPECT_EQ(evasion_rate(r), 0.0);
}

TEST(Metrics, CleanMistakesCountAsEvasions) {
  const auto r = make({{1, 2, 2}});
  EXPECT_EQ(evasion_rate(r), 1.0);
}

TEST(Metrics, EmptyInputRejected) {
  EXPECT_THROW(evasion_rate({}), ParameterError);
  EXPECT_THROW(robust_accuracy({}), ParameterError);
}

TEST(Metrics, ComplementIsExactForEveryCount) {
  for (int n = 1; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<EvalRecord> r;
      for (int i = 0; i < n; ++i) r.push_back({"x", 0, 0, i < k ? 1 : 0, ""});
      const double e = evasion_rate(r), a = robust_accuracy(r);
      ASSERT_EQ(e + a, 1.0) << n << " " << k;
      ASSERT_GE(e, 0.0);
      ASSERT_LE(e, 1.0);
    }
  }
}

TEST(Report, AssembleCarriesCountsAndRates) {
  const auto spec = PerturbationSpec::with_defaults(noise::SimplexParams{}, 3, 0.031);
  const auto rep = assemble_report(spec, "median(window=3)", kFixture);
  EXPECT_EQ(rep.fingerprint, spec.fingerprint());
  EXPECT_EQ(rep.defense, "median(window=3)");
  EXPECT_EQ(rep.records, kFixture);
  EXPECT_EQ(rep.evasion_rate, 0.3);
  EXPECT_EQ(rep.robust_accuracy, 0.7);
  EXPECT_EQ(rep.clean_accuracy, 0.8);
  EXPECT_EQ(rep.counts.evaded, 3u);
}

}  // namespace
}  // namespace procnoise::eval
