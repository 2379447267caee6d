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

#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/filters.h"
#include "trigscan/lists.h"
#include "trigscan/pipeline.h"

namespace trigscan {
namespace {

LogicBombFinding Finding(int id, const std::string& package, bool symbolic) {
  LogicBombFinding f;
  f.check.id = {static_cast<MethodId>(id), 0};
  f.check.descriptor = "#now cmp " + std::to_string(id);
  f.check.symbolic = symbolic;
  f.package = package;
  f.unit = package + ".C";
  return f;
}

std::vector<LogicBombFinding> RandomFindings(oracle::Rng& rng, int n) {
  static const char* kPackages[] = {"com.app",     "com.app.ui", "com.appx",
                                    "io.card.payment", "com.google.ads",
                                    "org.other",   "com.facebook"};
  std::uniform_int_distribution<int> pkg(0, 6);
  std::bernoulli_distribution sym(0.3);
  std::vector<LogicBombFinding> out;
  for (int i = 0; i < n; ++i) out.push_back(Finding(i, kPackages[pkg(rng)], sym(rng)));
  return out;
}

FilterConfig Config(bool sym, bool pkg, bool lib) {
  FilterConfig c;
  c.enable_symbolic = sym;
  c.enable_package = pkg;
  c.enable_library = lib;
  c.app_package = "com.app";
  c.library_prefixes = {"io.card", "com.google.ads", "com.facebook"};
  return c;
}

bool InApp(const std::string& package) {
  return package == "com.app" || package.rfind("com.app.", 0) == 0;
}
bool InLibrary(const std::string& package) {
  for (const char* p : {"io.card", "com.google.ads", "com.facebook"}) {
    const std::string prefix = p;
    if (package == prefix || package.rfind(prefix + ".", 0) == 0) return true;
  }
  return false;
}

TEST(PackagePrefixTest, MatchesOnDottedBoundaries) {
  EXPECT_TRUE(PackageHasPrefix("io.card.payment", "io.card"));
  EXPECT_TRUE(PackageHasPrefix("io.card", "io.card"));
  EXPECT_FALSE(PackageHasPrefix("io.cardx", "io.card"));
  EXPECT_FALSE(PackageHasPrefix("io", "io.card"));
}

TEST(FilterFlagsTest, ParsesSubsets) {
  EXPECT_FALSE(ParseFilterFlags("").any());
  const FilterConfig c = ParseFilterFlags("lib,sym");
  EXPECT_TRUE(c.enable_library);
  EXPECT_TRUE(c.enable_symbolic);
  EXPECT_FALSE(c.enable_package);
  EXPECT_THROW(ParseFilterFlags("sym,vta"), std::invalid_argument);
}

TEST(FilterTest, EachFilterRemovesExactlyItsPredicate) {
  oracle::Rng rng(3);
  const auto findings = RandomFindings(rng, 200);
  struct Case {
    FilterConfig config;
    std::function<bool(const LogicBombFinding&)> removes;
  };
  const std::vector<Case> cases = {
      {Config(true, false, false),
       [](const LogicBombFinding& f) { return f.check.symbolic; }},
      {Config(false, true, false),
       [](const LogicBombFinding& f) { return !InApp(f.package); }},
      {Config(false, false, true),
       [](const LogicBombFinding& f) { return InLibrary(f.package); }},
  };
  for (const auto& c : cases) {
    const FilterResult r = ApplyFilters(findings, c.config);
    size_t expect_removed = 0;
    for (const auto& f : findings) expect_removed += c.removes(f);
    EXPECT_EQ(r.removed.size(), expect_removed);
    for (const auto& f : r.kept) EXPECT_FALSE(c.removes(f));
    for (const auto& rf : r.removed) EXPECT_TRUE(c.removes(rf.finding));
  }
}

TEST(FilterTest, IdempotentAndPartitioning) {
  oracle::Rng rng(4);
  for (int mask = 0; mask < 8; ++mask) {
    const FilterConfig c = Config(mask & 1, mask & 2, mask & 4);
    const auto findings = RandomFindings(rng, 100);
    const FilterResult once = ApplyFilters(findings, c);
    const FilterResult twice = ApplyFilters(once.kept, c);
    EXPECT_EQ(twice.kept, once.kept);
    EXPECT_TRUE(twice.removed.empty());

    std::multiset<MethodId> all, parts;
    for (const auto& f : findings) all.insert(f.check.id.method);
    for (const auto& f : once.kept) parts.insert(f.check.id.method);
    for (const auto& rf : once.removed) parts.insert(rf.finding.check.id.method);
    EXPECT_EQ(all, parts);
    EXPECT_EQ(once.kept.size() + once.removed.size(), findings.size());
  }
}

TEST(FilterTest, RemovalIsAttributedToFirstFilterInOrder) {
  const std::vector<LogicBombFinding> findings = {
      Finding(0, "io.card.payment", true),
      Finding(1, "io.card.payment", false),
      Finding(2, "com.app", false),
  };
  const FilterResult r = ApplyFilters(findings, Config(true, true, true));
  ASSERT_EQ(r.removed.size(), 2u);
  EXPECT_EQ(r.removed[0].filter, FilterKind::kSymbolic);
  EXPECT_EQ(r.removed[1].filter, FilterKind::kPackage);
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].package, "com.app");
}

TEST(FilterTest, NoFiltersKeepsEverything) {
  oracle::Rng rng(8);
  const auto findings = RandomFindings(rng, 30);
  const FilterResult r = ApplyFilters(findings, Config(false, false, false));
  EXPECT_EQ(r.kept, findings);
  EXPECT_TRUE(r.removed.empty());
}

TEST(FilterTest, CardIoFindingRemovedByLibraryFilter) {
  const std::string path = std::string(TRIGSCAN_CORPUS_DIR) + "/card_io.tbir";
  AnalysisConfig control;
  const AnalysisReport base = AnalyzeFile(path, control);
  ASSERT_EQ(base.findings.size(), 1u);
  EXPECT_EQ(base.findings[0].package, "io.card.payment");

  AnalysisConfig lib;
  lib.filters = ParseFilterFlags("lib");
  lib.filters.library_prefixes = DefaultLibraryPrefixes();
  const AnalysisReport filtered = AnalyzeFile(path, lib);
  EXPECT_TRUE(filtered.findings.empty());
  ASSERT_EQ(filtered.filtered.size(), 1u);
  EXPECT_EQ(filtered.filtered[0].filter, FilterKind::kLibrary);
}

TEST(FilterTest, InferAppPackageUsesFirstComponent) {
  const Program p = ParseProgram(
      "class lib.x.Util kind BasicClass {\n}\n"
      "class com.app.Main kind Activity {\n}\n",
      "x");
  EXPECT_EQ(InferAppPackage(p), "com.app");
  const Program q = ParseProgram("class lib.x.Util kind BasicClass {\n}\n", "x");
  EXPECT_EQ(InferAppPackage(q), "lib.x");
}

}  // namespace
}  // namespace trigscan
