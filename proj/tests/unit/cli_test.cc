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

#include <filesystem>

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/report.h"

namespace trigscan {
namespace {

#ifdef TRIGSCAN_CLI_PATH

oracle::CommandResult Cli(const std::string& args) {
  return oracle::RunCommand(std::string(TRIGSCAN_CLI_PATH) + " " + args +
                            " 2>/dev/null");
}

std::string Fixture(const std::string& name) {
  return std::string(TRIGSCAN_CORPUS_DIR) + "/" + name;
}

TEST(CliTest, ExitCodeZeroWithoutFindings) {
  EXPECT_EQ(Cli("analyze " + Fixture("empty.tbir")).exit_code, 0);
  EXPECT_EQ(Cli("analyze " + Fixture("benign_plain.tbir")).exit_code, 0);
}

TEST(CliTest, ExitCodeOneWithFindings) {
  const auto r = Cli("analyze " + Fixture("time_bomb.tbir"));
  EXPECT_EQ(r.exit_code, 1);
  const AnalysisReport report = ParseReportJson(r.output);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].check.kind, TriggerKind::kTime);
}

TEST(CliTest, ExitCodeTwoOnUsageErrors) {
  EXPECT_EQ(Cli("").exit_code, 2);
  EXPECT_EQ(Cli("analyze --callgraph vta " + Fixture("time_bomb.tbir")).exit_code,
            2);
  EXPECT_EQ(Cli("analyze --filters bogus " + Fixture("time_bomb.tbir")).exit_code,
            2);
  EXPECT_EQ(Cli("frobnicate").exit_code, 2);
}

TEST(CliTest, ExitCodeThreeOnErrorsEvenWithFindings) {
  EXPECT_EQ(Cli("analyze /nonexistent/file.tbir").exit_code, 3);
  EXPECT_EQ(Cli("analyze " + Fixture("time_bomb.tbir") + " /nonexistent.tbir")
                .exit_code,
            3);
}

TEST(CliTest, LibraryFilterRemovesCardIo) {
  EXPECT_EQ(Cli("analyze " + Fixture("card_io.tbir")).exit_code, 1);
  EXPECT_EQ(Cli("analyze --filters lib " + Fixture("card_io.tbir")).exit_code, 0);
}

TEST(CliTest, RtaDropsPolymorphicFinding) {
  EXPECT_EQ(Cli("analyze --callgraph cha " + Fixture("polymorphic.tbir")).exit_code,
            1);
  EXPECT_EQ(Cli("analyze --callgraph rta " + Fixture("polymorphic.tbir")).exit_code,
            0);
}

TEST(CliTest, TextFormatAndDumpIcfg) {
  const auto text = Cli("analyze --format text " + Fixture("sms_bomb.tbir"));
  EXPECT_NE(text.output.find("startsWith"), std::string::npos);
  const auto dot = Cli("dump-icfg " + Fixture("sms_bomb.tbir"));
  EXPECT_EQ(dot.exit_code, 0);
  EXPECT_EQ(dot.output.rfind("digraph", 0), 0u);
}

TEST(CliTest, BatchCanonicalOutputIsStable) {
  const std::string cmd =
      "batch --canonical --seed 4 --jobs 2 " + Fixture("manifest.tsv");
  const auto a = Cli(cmd);
  const auto b = Cli(cmd);
  EXPECT_EQ(a.exit_code, 1);
  EXPECT_EQ(a.output, b.output);
  EXPECT_FALSE(a.output.empty());
}

TEST(CliTest, SynthWritesManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "trigscan_cli_synth";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(Cli("synth --programs 6 --seed 2 " + dir.string()).exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.tsv"));
  EXPECT_NE(Cli("batch " + (dir / "manifest.tsv").string()).exit_code, 3);
  std::filesystem::remove_all(dir);
}

#else

TEST(CliTest, Skipped) { GTEST_SKIP() << "tool not built"; }

#endif

}  // namespace
}  // namespace trigscan
