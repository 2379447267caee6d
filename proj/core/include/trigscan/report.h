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

#ifndef TRIGSCAN_REPORT_H_
#define TRIGSCAN_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/classify.h"
#include "trigscan/controldep.h"
#include "trigscan/filters.h"

namespace trigscan {

inline constexpr int kReportSchemaVersion = 1;

enum class AnalysisStatus { kOk, kTimeout, kError };

std::string_view AnalysisStatusName(AnalysisStatus status);  // ok|timeout|error
std::optional<AnalysisStatus> ParseAnalysisStatus(std::string_view name);

struct PhaseDurations {
  double graphs_ms = 0;
  double symex_ms = 0;
  double predicate_recovery_ms = 0;
  double classification_ms = 0;
  double controldep_ms = 0;
  double filters_ms = 0;
  bool operator==(const PhaseDurations&) const = default;
};

// Every setting that influenced the run.
struct ConfigEcho {
  std::string callgraph = "cha";
  std::vector<std::string> filters;  // enabled filter names, in order
  std::string app_package;
  std::string library_list;
  size_t library_list_size = 0;
  std::string sensitive_list;
  size_t sensitive_list_size = 0;
  std::string catalog;
  size_t atom_cap = 16;
  size_t formula_cap = 4096;
  int switch_depth = 1;
  int max_depth = 10;
  double timeout_secs = 60;
  bool prefix_match = false;
  bool operator==(const ConfigEcho&) const = default;
};

struct AnalysisReport {
  std::string source_id;
  AnalysisStatus status = AnalysisStatus::kOk;
  std::string error;
  double duration_ms = 0;
  PhaseDurations phases;
  std::vector<LogicBombFinding> findings;     // after filters
  std::vector<RemovedFinding> filtered;       // removed by filters
  std::vector<RemovedCheck> post_filtered;    // obvious checks set aside
  bool partial = false;                       // findings may be incomplete
  ConfigEcho config;
  std::vector<std::string> diagnostics;

  bool flagged() const { return !findings.empty(); }
  bool operator==(const AnalysisReport&) const = default;
};

struct Histograms {
  std::map<std::string, int> trigger_kind;  // Time, Location, SMS
  std::map<std::string, int> component;     // A, S, BR, CP, BC
  std::map<std::string, int> starting_component;
  std::map<int, int> formula_size;
  std::map<int, int> guarded_count;
};

// All kinds present with zero counts.
Histograms ComputeHistograms(const std::vector<LogicBombFinding>& findings);

enum class ReportFormat { kJson, kText };

// JSON keys are sorted and findings kept in analysis order, so a fixed
// report renders to fixed bytes. `indent` < 0 renders on one line.
std::string RenderReportJson(const AnalysisReport& report, int indent = 2);
std::string RenderReportText(const AnalysisReport& report);
std::string RenderReport(const AnalysisReport& report, ReportFormat format);

// Inverse of RenderReportJson. Throws std::invalid_argument on schema
// mismatch.
AnalysisReport ParseReportJson(std::string_view json);

}  // namespace trigscan

#endif  // TRIGSCAN_REPORT_H_
