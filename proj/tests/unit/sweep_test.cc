// Copyright 2026 The Trigscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "trigscan/sweep.h"
#include "trigscan/synthetic.h"

namespace trigscan {
namespace {

const std::string kManifest = std::string(TRIGSCAN_CORPUS_DIR) + "/manifest.tsv";

TEST(RemovalOrderTest, RandomIsSeededPermutation) {
  const SensitiveList& base = SensitiveList::Small();
  const auto a = RemovalOrder(base, SweepOrdering::kRandom, 1, {});
  const auto b = RemovalOrder(base, SweepOrdering::kRandom, 1, {});
  const auto c = RemovalOrder(base, SweepOrdering::kRandom, 2, {});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(std::set<std::string>(a.begin(), a.end()),
            std::set<std::string>(base.entries().begin(), base.entries().end()));
}

TEST(RemovalOrderTest, MostUsedFirstSortsByUsage) {
  const SensitiveList base("t", {"a.A.x", "b.B.y", "c.C.z", "d.D.w"});
  const std::map<std::string, size_t> usage = {{"c.C.z", 5}, {"b.B.y", 2},
                                               {"d.D.w", 2}};
  EXPECT_EQ(RemovalOrder(base, SweepOrdering::kMostUsedFirst, 0, usage),
            (std::vector<std::string>{"c.C.z", "b.B.y", "d.D.w", "a.A.x"}));
}

TEST(SweepTest, StepZeroIsControlAndAllRemovedFlagsNothing) {
  const CorpusManifest m = CorpusManifest::Load(kManifest);
  SweepOptions options;
  options.num_steps = 4;
  options.seed = 3;
  const SensitiveList& base = SensitiveList::Full();
  const auto results = SweepSensitiveList(m, {}, base, options);
  ASSERT_EQ(results.size(), 1u);
  const auto& steps = results[0].steps;
  ASSERT_GE(steps.size(), 2u);
  EXPECT_EQ(steps.front().removed, 0u);
  EXPECT_EQ(steps.back().removed, base.size());

  const BatchResult control = RunBatch(m, {}, 1);
  EXPECT_EQ(steps.front().flagged_benign, control.summary.flagged_benign);
  EXPECT_EQ(steps.front().flagged_malicious, control.summary.flagged_malicious);
  EXPECT_DOUBLE_EQ(steps.front().fp, control.summary.fp_rate);
  EXPECT_DOUBLE_EQ(steps.front().fn, control.summary.fn_rate);

  EXPECT_EQ(steps.back().flagged_benign, 0u);
  EXPECT_EQ(steps.back().flagged_malicious, 0u);
  EXPECT_DOUBLE_EQ(steps.back().fp, 0.0);
  EXPECT_DOUBLE_EQ(steps.back().fn, 1.0);
}

TEST(SweepTest, RatesAreMonotoneOnSyntheticCorpus) {
  const CorpusManifest m = SyntheticManifest(GenerateSyntheticCorpus({40, 2}));
  for (auto ordering : {SweepOrdering::kRandom, SweepOrdering::kMostUsedFirst}) {
    SweepOptions options;
    options.ordering = ordering;
    options.repeats = 2;
    options.seed = 8;
    options.jobs = 2;
    const auto results = SweepSensitiveList(m, {}, SensitiveList::Full(), options);
    EXPECT_EQ(results.size(), ordering == SweepOrdering::kRandom ? 2u : 1u);
    for (const auto& r : results) {
      for (size_t i = 1; i < r.steps.size(); ++i) {
        EXPECT_LE(r.steps[i].fp, r.steps[i - 1].fp);
        EXPECT_GE(r.steps[i].fn, r.steps[i - 1].fn);
      }
      EXPECT_DOUBLE_EQ(r.steps.back().fp, 0.0);
      EXPECT_DOUBLE_EQ(r.steps.back().fn, 1.0);
    }
  }
}

TEST(SweepTest, ExplicitStepsAreClampedAndSorted) {
  CorpusManifest m = CorpusManifest::Load(kManifest);
  m.entries.resize(3);
  SweepOptions options;
  options.steps = {50, 10, 100000};
  const SensitiveList& base = SensitiveList::Small();
  const auto results = SweepSensitiveList(m, {}, base, options);
  std::vector<size_t> removed;
  for (const auto& s : results[0].steps) removed.push_back(s.removed);
  EXPECT_EQ(removed, (std::vector<size_t>{0, 10, 50, base.size()}));
}

TEST(SweepTest, JsonNamesOrderingAndSteps) {
  CorpusManifest m = CorpusManifest::Load(kManifest);
  m.entries.resize(2);
  SweepOptions options;
  options.ordering = SweepOrdering::kMostUsedFirst;
  options.num_steps = 2;
  const auto results = SweepSensitiveList(m, {}, SensitiveList::Small(), options);
  const std::string json = RenderSweepJson(results, SensitiveList::Small());
  EXPECT_NE(json.find("\"most-used\""), std::string::npos);
  EXPECT_NE(json.find("\"sensitive_list_size\": 130"), std::string::npos);
  EXPECT_EQ(ParseSweepOrdering("most-used-first"), SweepOrdering::kMostUsedFirst);
  EXPECT_FALSE(ParseSweepOrdering("alphabetical"));
}

}  // namespace
}  // namespace trigscan
