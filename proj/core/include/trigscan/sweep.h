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

// Sensitive-list ablation: FP/FN rates as entries are removed from the list.

#ifndef TRIGSCAN_SWEEP_H_
#define TRIGSCAN_SWEEP_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/batch.h"
#include "trigscan/lists.h"
#include "trigscan/pipeline.h"

namespace trigscan {

enum class SweepOrdering { kRandom, kMostUsedFirst };

std::string_view SweepOrderingName(SweepOrdering ordering);  // random|most-used
std::optional<SweepOrdering> ParseSweepOrdering(std::string_view name);

struct SweepOptions {
  SweepOrdering ordering = SweepOrdering::kRandom;
  // Removal counts to evaluate. Empty selects `num_steps` evenly spaced
  // counts. 0 and the full list size are always included.
  std::vector<size_t> steps;
  size_t num_steps = 10;
  int repeats = 1;
  uint64_t seed = 0;
  int jobs = 1;
};

struct SweepStep {
  size_t removed = 0;
  size_t flagged_benign = 0;
  size_t flagged_malicious = 0;
  double fp = 0;
  double fn = 0;
  bool operator==(const SweepStep&) const = default;
};

struct SweepResult {
  SweepOrdering ordering = SweepOrdering::kRandom;
  uint64_t seed = 0;  // seed of this repeat's shuffle
  int repeat = 0;
  std::vector<std::string> removal_order;
  std::vector<SweepStep> steps;
  bool operator==(const SweepResult&) const = default;
};

// Occurrences of each list entry among the sensitive calls of the control
// run's findings.
std::map<std::string, size_t> SensitiveUsage(
    const std::vector<AnalysisReport>& control);

// Removal order: a seeded shuffle, or by descending usage with ties broken
// by name.
std::vector<std::string> RemovalOrder(
    const SensitiveList& base, SweepOrdering ordering, uint64_t seed,
    const std::map<std::string, size_t>& usage);

// Runs the control analysis once per program and re-evaluates the
// list-dependent phases for every step. Returns one result per repeat
// (a single one for most-used-first, which is deterministic).
std::vector<SweepResult> SweepSensitiveList(const CorpusManifest& manifest,
                                            const AnalysisConfig& config,
                                            const SensitiveList& base,
                                            const SweepOptions& options);

std::string RenderSweepJson(const std::vector<SweepResult>& results,
                            const SensitiveList& base);

}  // namespace trigscan

#endif  // TRIGSCAN_SWEEP_H_
