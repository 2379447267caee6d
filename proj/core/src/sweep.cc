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

#include "trigscan/sweep.h"

#include <algorithm>
#include <atomic>
#include <memory>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

namespace trigscan {

std::string_view SweepOrderingName(SweepOrdering ordering) {
  return ordering == SweepOrdering::kRandom ? "random" : "most-used";
}

std::optional<SweepOrdering> ParseSweepOrdering(std::string_view name) {
  if (name == "random") return SweepOrdering::kRandom;
  if (name == "most-used" || name == "most-used-first") {
    return SweepOrdering::kMostUsedFirst;
  }
  return std::nullopt;
}

std::map<std::string, size_t> SensitiveUsage(
    const std::vector<AnalysisReport>& control) {
  std::map<std::string, size_t> usage;
  for (const auto& report : control) {
    for (const auto& f : report.findings) {
      for (const auto& call : f.sensitive_calls) ++usage[call.signature];
    }
  }
  return usage;
}

std::vector<std::string> RemovalOrder(
    const SensitiveList& base, SweepOrdering ordering, uint64_t seed,
    const std::map<std::string, size_t>& usage) {
  std::vector<std::string> order(base.entries().begin(), base.entries().end());
  if (ordering == SweepOrdering::kRandom) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  } else {
    auto count = [&](const std::string& s) {
      auto it = usage.find(s);
      return it == usage.end() ? size_t{0} : it->second;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string& a, const std::string& b) {
                       return count(a) > count(b);
                     });
  }
  return order;
}

namespace {

std::vector<size_t> StepCounts(const SweepOptions& options, size_t n) {
  std::set<size_t> counts = {0, n};
  if (options.steps.empty()) {
    const size_t k = std::max<size_t>(options.num_steps, 1);
    for (size_t i = 0; i <= k; ++i) counts.insert(i * n / k);
  } else {
    for (size_t c : options.steps) counts.insert(std::min(c, n));
  }
  return {counts.begin(), counts.end()};
}

template <typename Fn>
void ParallelFor(size_t n, int jobs, Fn fn) {
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) fn(i);
  };
  const size_t threads = std::min<size_t>(std::max(jobs, 1), std::max<size_t>(n, 1));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<SweepResult> SweepSensitiveList(const CorpusManifest& manifest,
                                            const AnalysisConfig& config,
                                            const SensitiveList& base,
                                            const SweepOptions& options) {
  const size_t n = manifest.entries.size();
  std::vector<std::unique_ptr<PreparedProgram>> prepared(n);
  std::vector<AnalysisReport> control(n);
  ParallelFor(n, options.jobs, [&](size_t i) {
    const ManifestEntry& entry = manifest.entries[i];
    try {
      std::string text = entry.text ? *entry.text : ReadFile(entry.path);
      Deadline deadline = config.timeout_secs > 0
                              ? Deadline::After(config.timeout_secs)
                              : Deadline::Never();
      prepared[i] = PreparedProgram::Prepare(ParseProgram(text, entry.path),
                                             config, deadline);
      control[i] = prepared[i]->Finish(config, base, deadline);
    } catch (const std::exception& e) {
      prepared[i].reset();
      control[i] = AnalysisReport{};
      control[i].source_id = entry.path;
      control[i].status = AnalysisStatus::kError;
      control[i].error = e.what();
    }
  });
  const auto usage = SensitiveUsage(control);
  const std::vector<size_t> counts = StepCounts(options, base.size());

  std::vector<SweepResult> results;
  const int repeats =
      options.ordering == SweepOrdering::kRandom ? std::max(options.repeats, 1)
                                                 : 1;
  for (int rep = 0; rep < repeats; ++rep) {
    SweepResult result;
    result.ordering = options.ordering;
    result.repeat = rep;
    result.seed = options.seed + static_cast<uint64_t>(rep);
    result.removal_order = RemovalOrder(base, options.ordering, result.seed, usage);
    for (size_t count : counts) {
      std::set<std::string, std::less<>> removed(
          result.removal_order.begin(), result.removal_order.begin() + count);
      const SensitiveList list = base.Without(
          removed, base.name() + "-minus-" + std::to_string(count));
      std::vector<char> flagged(n, 0);
      ParallelFor(n, options.jobs, [&](size_t i) {
        if (!prepared[i]) return;
        if (count == 0) {
          flagged[i] = control[i].flagged();
          return;
        }
        flagged[i] = prepared[i]->Finish(config, list).flagged();
      });
      SweepStep step;
      step.removed = count;
      size_t benign = 0, malicious = 0;
      for (size_t i = 0; i < n; ++i) {
        if (manifest.entries[i].label == Label::kBenign) {
          ++benign;
          step.flagged_benign += flagged[i];
        } else {
          ++malicious;
          step.flagged_malicious += flagged[i];
        }
      }
      step.fp = benign ? static_cast<double>(step.flagged_benign) / benign : 0;
      step.fn = malicious ? static_cast<double>(malicious -
                                                step.flagged_malicious) /
                                malicious
                          : 0;
      result.steps.push_back(step);
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::string RenderSweepJson(const std::vector<SweepResult>& results,
                            const SensitiveList& base) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"removed", s.removed},
                       {"flagged_benign", s.flagged_benign},
                       {"flagged_malicious", s.flagged_malicious},
                       {"fp", s.fp},
                       {"fn", s.fn}});
    }
    const size_t head = std::min<size_t>(r.removal_order.size(), 20);
    runs.push_back(
        {{"ordering", SweepOrderingName(r.ordering)},
         {"seed", r.seed},
         {"repeat", r.repeat},
         {"first_removed",
          std::vector<std::string>(r.removal_order.begin(),
                                   r.removal_order.begin() + head)},
         {"steps", steps}});
  }
  nlohmann::json doc = {{"sensitive_list", base.name()},
                        {"sensitive_list_size", base.size()},
                        {"runs", runs}};
  return doc.dump(2) + "\n";
}

}  // namespace trigscan
