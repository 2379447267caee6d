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

#include <algorithm>
#include <filesystem>

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/controldep.h"
#include "trigscan/lists.h"
#include "trigscan/pipeline.h"

namespace trigscan {
namespace {

std::string Fixture(const std::string& name) {
  return std::string(TRIGSCAN_CORPUS_DIR) + "/" + name;
}

AnalysisReport Analyze(const std::string& name,
                       AnalysisConfig config = AnalysisConfig{}) {
  AnalysisReport r = AnalyzeFile(Fixture(name), config);
  EXPECT_EQ(r.status, AnalysisStatus::kOk) << r.error;
  return r;
}

std::set<std::pair<std::string, std::string>> Keys(const AnalysisReport& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& f : r.findings) {
    out.insert({f.method + "#" + std::to_string(f.check.id.index),
                f.check.descriptor});
  }
  return out;
}

TEST(ControlDepTest, SmsBombStackGoesThroughProcessCmd) {
  const AnalysisReport r = Analyze("sms_bomb.tbir");
  ASSERT_EQ(r.findings.size(), 1u);
  const LogicBombFinding& f = r.findings[0];
  EXPECT_EQ(f.check.kind, TriggerKind::kSms);
  EXPECT_EQ(f.check.descriptor, "#sms/#body.startsWith(\"!CMD:\")");
  EXPECT_EQ(f.component, ComponentKind::kBroadcastReceiver);
  bool through = false;
  for (const auto& call : f.sensitive_calls) {
    for (const auto& frame : call.stack) {
      if (frame.callee == "com.example.smsbomb.SmsReceiver.processCmd") {
        through = true;
      }
    }
  }
  EXPECT_TRUE(through);
  EXPECT_FALSE(f.nested);
  EXPECT_FALSE(f.via_switch);
  EXPECT_GT(f.guarded_count, 0);
}

TEST(ControlDepTest, HolyColbertHasTimeAndNestedSmsFindings) {
  const AnalysisReport r = Analyze("holy_colbert.tbir");
  ASSERT_EQ(r.findings.size(), 2u);
  const LogicBombFinding* time = nullptr;
  const LogicBombFinding* sms = nullptr;
  for (const auto& f : r.findings) {
    if (f.check.kind == TriggerKind::kTime) time = &f;
    if (f.check.kind == TriggerKind::kSms) sms = &f;
  }
  ASSERT_NE(time, nullptr);
  ASSERT_NE(sms, nullptr);
  EXPECT_FALSE(time->nested);
  EXPECT_TRUE(sms->nested);
  EXPECT_EQ(sms->check.descriptor, "#sms/#body.matches(\"health\")");
}

TEST(ControlDepTest, SwitchFieldExtendsSearch) {
  const AnalysisReport r = Analyze("switch_bomb.tbir");
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].via_switch, std::optional<std::string>("armed"));
  EXPECT_FALSE(r.findings[0].switch_checks.empty());

  AnalysisConfig no_switch;
  no_switch.controldep.switch_depth = 0;
  EXPECT_TRUE(Analyze("switch_bomb.tbir", no_switch).findings.empty());
}

TEST(ControlDepTest, CallDepthLimitsSearch) {
  AnalysisConfig shallow;
  shallow.controldep.max_depth = 0;
  EXPECT_TRUE(Analyze("time_bomb.tbir", shallow).findings.empty());
  shallow.controldep.max_depth = 1;
  EXPECT_EQ(Analyze("time_bomb.tbir", shallow).findings.size(), 1u);
}

TEST(ControlDepTest, EmptyListFindsNothing) {
  AnalysisConfig config;
  config.sensitive = std::make_shared<SensitiveList>("empty",
                                                     std::vector<std::string>{});
  for (const char* name : {"time_bomb.tbir", "sms_bomb.tbir", "holy_colbert.tbir"}) {
    EXPECT_TRUE(Analyze(name, config).findings.empty()) << name;
  }
}

TEST(ControlDepTest, PrefixEntriesNeedPrefixMatching) {
  AnalysisConfig config;
  config.sensitive = std::make_shared<SensitiveList>(
      "prefix", std::vector<std::string>{"android.telephony.SmsManager.*"});
  EXPECT_TRUE(Analyze("time_bomb.tbir", config).findings.empty());
  config.controldep.allow_prefix = true;
  EXPECT_EQ(Analyze("time_bomb.tbir", config).findings.size(), 1u);
}

TEST(ControlDepTest, FindingsShrinkWithTheList) {
  oracle::Rng rng(5);
  const SensitiveList& full = SensitiveList::Full();
  std::vector<std::string> entries(full.entries().begin(), full.entries().end());
  std::vector<std::string> fixtures;
  for (const auto& e : std::filesystem::directory_iterator(TRIGSCAN_CORPUS_DIR)) {
    if (e.path().extension() == ".tbir") fixtures.push_back(e.path().filename());
  }
  std::sort(fixtures.begin(), fixtures.end());
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(entries.begin(), entries.end(), rng);
    std::set<std::string, std::less<>> removed;
    AnalysisConfig bigger;
    bigger.sensitive = std::make_shared<SensitiveList>(full);
    for (size_t cut : {entries.size() / 4, entries.size() / 2, entries.size()}) {
      removed.insert(entries.begin() + removed.size(), entries.begin() + cut);
      AnalysisConfig smaller;
      smaller.sensitive =
          std::make_shared<SensitiveList>(full.Without(removed, "cut"));
      for (const auto& name : fixtures) {
        const auto big = Keys(Analyze(name, bigger));
        for (const auto& k : Keys(Analyze(name, smaller))) {
          EXPECT_TRUE(big.count(k)) << name << " " << k.second;
        }
      }
      bigger = smaller;
    }
  }
}

TEST(ControlDepTest, GuardedInstructionsSplitByPolarity) {
  const std::string body =
      "class a.M kind Activity {\n method onCreate() {\n local x : int\n"
      " if x == 0 goto t\n x = 1\n return\nt: x = 2\n return\n }\n}\n";
  auto prepared = PreparedProgram::Prepare(ParseProgram(body, "x"), {});
  const MethodId m = 0;
  const auto& preds = prepared->predicates().at(m);
  const uint64_t atom = StmtId{m, 0}.Key();
  const GuardedRegion taken = GuardedInstructions(m, atom, true, preds);
  EXPECT_EQ(taken.positive, (std::vector<StmtId>{{m, 3}, {m, 4}}));
  EXPECT_EQ(taken.negative, (std::vector<StmtId>{{m, 1}, {m, 2}}));
  const GuardedRegion fall = GuardedInstructions(m, atom, false, preds);
  EXPECT_EQ(fall.positive, taken.negative);
}

}  // namespace
}  // namespace trigscan
