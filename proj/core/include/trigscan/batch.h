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

// Corpus-scale runs: manifests, parallel analysis and FP/FN accounting.

#ifndef TRIGSCAN_BATCH_H_
#define TRIGSCAN_BATCH_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/pipeline.h"
#include "trigscan/report.h"

namespace trigscan {

enum class Label { kBenign, kMalicious };

std::string_view LabelName(Label label);  // "benign" | "malicious"
std::optional<Label> ParseLabel(std::string_view name);

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ManifestEntry {
  std::string path;
  Label label = Label::kBenign;
  // Descriptors the program is expected to yield; unset means unchecked.
  std::optional<std::vector<std::string>> expected;
  // In-memory program text; when set, `path` is only the source id.
  std::optional<std::string> text;
};

// Line format: `path<TAB>label[<TAB>expected...]`. `-` as the only expected
// column means "no findings". Blank lines and lines starting with `#` are
// skipped.
struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  // Relative paths are resolved against `base_dir` when it is non-empty.
  // Throws ManifestError.
  static CorpusManifest Parse(std::string_view text,
                              const std::string& base_dir = "");
  // Reads and parses a manifest file, resolving paths against its directory
  // and checking that every file exists.
  static CorpusManifest Load(const std::string& path);
};

struct BatchEntryResult {
  ManifestEntry entry;
  AnalysisReport report;
  // Set when the entry lists expected descriptors.
  std::optional<bool> expected_match;
};

struct BatchSummary {
  size_t programs = 0;
  size_t ok = 0;
  size_t timeouts = 0;
  size_t errors = 0;
  double success_rate = 0;
  double mean_duration_ms = 0;
  size_t benign = 0;
  size_t malicious = 0;
  size_t flagged_benign = 0;
  size_t flagged_malicious = 0;
  double fp_rate = 0;  // flagged benign / benign
  double fn_rate = 0;  // unflagged malicious / malicious
  size_t findings = 0;
  std::map<std::string, double> trigger_kind_shares;
  size_t expected_checked = 0;
  std::vector<std::string> expected_mismatches;  // source ids
  // Spearman correlation of formula size and guarded count over all
  // findings; unset when the sample is degenerate.
  std::optional<double> size_guarded_spearman;
};

struct BatchResult {
  std::vector<BatchEntryResult> results;  // manifest order
  BatchSummary summary;
};

// Descriptors of the report's findings, sorted.
std::vector<std::string> FindingDescriptors(const AnalysisReport& report);

BatchSummary Summarize(const std::vector<BatchEntryResult>& results);

// Analyzes every entry with `jobs` worker threads. Failures are isolated in
// each report's status.
BatchResult RunBatch(const CorpusManifest& manifest,
                     const AnalysisConfig& config, int jobs = 1);

// Aggregate summary as one JSON document. With `include_timing` false all
// wall-clock fields are omitted, so identical runs render identical bytes.
std::string RenderBatchSummaryJson(const BatchResult& result,
                                   bool include_timing = true);

// One compact JSON report per line, in manifest order.
std::string RenderBatchReportLines(const BatchResult& result);

}  // namespace trigscan

#endif  // TRIGSCAN_BATCH_H_
