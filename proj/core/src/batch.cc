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

#include "trigscan/batch.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <thread>

#include "json_codec.h"
#include "trigscan/correlation.h"

namespace trigscan {

namespace fs = std::filesystem;
using json_codec::Json;

std::string_view LabelName(Label label) {
  return label == Label::kMalicious ? "malicious" : "benign";
}

std::optional<Label> ParseLabel(std::string_view name) {
  if (name == "benign") return Label::kBenign;
  if (name == "malicious") return Label::kMalicious;
  return std::nullopt;
}

namespace {

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string_view TrimRight(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

CorpusManifest CorpusManifest::Parse(std::string_view text,
                                     const std::string& base_dir) {
  CorpusManifest manifest;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = TrimRight(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> cols = SplitTabs(line);
    auto where = "manifest line " + std::to_string(line_no) + ": ";
    if (cols.size() < 2 || cols[0].empty()) {
      throw ManifestError(where + "expected path<TAB>label");
    }
    ManifestEntry entry;
    auto label = ParseLabel(cols[1]);
    if (!label) {
      throw ManifestError(where + "unknown label '" + cols[1] +
                          "' (expected benign or malicious)");
    }
    entry.label = *label;
    entry.path = cols[0];
    if (!base_dir.empty() && fs::path(entry.path).is_relative()) {
      entry.path = (fs::path(base_dir) / entry.path).lexically_normal().string();
    }
    if (cols.size() > 2) {
      entry.expected.emplace();
      if (!(cols.size() == 3 && cols[2] == "-")) {
        for (size_t i = 2; i < cols.size(); ++i) {
          if (cols[i].empty() || cols[i] == "-") {
            throw ManifestError(where + "empty expected descriptor");
          }
          entry.expected->push_back(cols[i]);
        }
        std::sort(entry.expected->begin(), entry.expected->end());
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest CorpusManifest::Load(const std::string& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const std::exception& e) {
    throw ManifestError(e.what());
  }
  CorpusManifest manifest =
      Parse(text, fs::path(path).parent_path().string());
  for (const auto& entry : manifest.entries) {
    if (!fs::exists(entry.path)) {
      throw ManifestError("manifest entry does not exist: " + entry.path);
    }
  }
  return manifest;
}

std::vector<std::string> FindingDescriptors(const AnalysisReport& report) {
  std::vector<std::string> out;
  for (const auto& f : report.findings) out.push_back(f.check.descriptor);
  std::sort(out.begin(), out.end());
  return out;
}

BatchSummary Summarize(const std::vector<BatchEntryResult>& results) {
  BatchSummary s;
  s.programs = results.size();
  double total_ms = 0;
  std::map<std::string, size_t> kinds;
  std::vector<double> sizes, guarded;
  for (const auto& r : results) {
    switch (r.report.status) {
      case AnalysisStatus::kOk:
        ++s.ok;
        break;
      case AnalysisStatus::kTimeout:
        ++s.timeouts;
        break;
      case AnalysisStatus::kError:
        ++s.errors;
        break;
    }
    total_ms += r.report.duration_ms;
    const bool flagged = r.report.flagged();
    if (r.entry.label == Label::kBenign) {
      ++s.benign;
      s.flagged_benign += flagged;
    } else {
      ++s.malicious;
      s.flagged_malicious += flagged;
    }
    for (const auto& f : r.report.findings) {
      ++s.findings;
      ++kinds[std::string(TriggerKindName(f.check.kind))];
      sizes.push_back(f.formula_size);
      guarded.push_back(f.guarded_count);
    }
    if (r.expected_match) {
      ++s.expected_checked;
      if (!*r.expected_match) s.expected_mismatches.push_back(r.report.source_id);
    }
  }
  if (s.programs) {
    s.success_rate = static_cast<double>(s.ok) / s.programs;
    s.mean_duration_ms = total_ms / s.programs;
  }
  if (s.benign) s.fp_rate = static_cast<double>(s.flagged_benign) / s.benign;
  if (s.malicious) {
    s.fn_rate = static_cast<double>(s.malicious - s.flagged_malicious) /
                s.malicious;
  }
  for (auto kind : {TriggerKind::kTime, TriggerKind::kLocation,
                    TriggerKind::kSms}) {
    std::string name(TriggerKindName(kind));
    s.trigger_kind_shares[name] =
        s.findings ? static_cast<double>(kinds[name]) / s.findings : 0.0;
  }
  try {
    s.size_guarded_spearman = Spearman(sizes, guarded);
  } catch (const DegenerateSample&) {
  }
  return s;
}

BatchResult RunBatch(const CorpusManifest& manifest,
                     const AnalysisConfig& config, int jobs) {
  BatchResult result;
  const size_t n = manifest.entries.size();
  result.results.resize(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      const ManifestEntry& entry = manifest.entries[i];
      BatchEntryResult& out = result.results[i];
      out.entry = entry;
      out.report = entry.text ? AnalyzeSource(*entry.text, entry.path, config)
                              : AnalyzeFile(entry.path, config);
      if (entry.expected) {
        out.expected_match = FindingDescriptors(out.report) == *entry.expected;
      }
    }
  };
  const size_t threads =
      std::clamp<size_t>(static_cast<size_t>(std::max(jobs, 1)), 1,
                         std::max<size_t>(n, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.summary = Summarize(result.results);
  return result;
}

std::string RenderBatchSummaryJson(const BatchResult& result,
                                   bool include_timing) {
  const BatchSummary& s = result.summary;
  Json programs = Json::array();
  for (const auto& r : result.results) {
    Json p = {
        {"source_id", r.report.source_id},
        {"label", LabelName(r.entry.label)},
        {"status", AnalysisStatusName(r.report.status)},
        {"error", r.report.error},
        {"flagged", r.report.flagged()},
        {"partial", r.report.partial},
        {"descriptors", FindingDescriptors(r.report)},
        {"filtered", r.report.filtered.size()},
        {"expected_match",
         r.expected_match ? Json(*r.expected_match) : Json(nullptr)},
    };
    if (include_timing) p["duration_ms"] = r.report.duration_ms;
    programs.push_back(std::move(p));
  }
  Json summary = {
      {"programs", s.programs},
      {"ok", s.ok},
      {"timeouts", s.timeouts},
      {"errors", s.errors},
      {"success_rate", s.success_rate},
      {"benign", s.benign},
      {"malicious", s.malicious},
      {"flagged_benign", s.flagged_benign},
      {"flagged_malicious", s.flagged_malicious},
      {"fp_rate", s.fp_rate},
      {"fn_rate", s.fn_rate},
      {"findings", s.findings},
      {"trigger_kind_shares", s.trigger_kind_shares},
      {"expected_checked", s.expected_checked},
      {"expected_mismatches", s.expected_mismatches},
      {"size_guarded_spearman", s.size_guarded_spearman
                                    ? Json(*s.size_guarded_spearman)
                                    : Json(nullptr)},
  };
  if (include_timing) summary["mean_duration_ms"] = s.mean_duration_ms;
  Json doc = {{"schema_version", kReportSchemaVersion},
              {"summary", summary},
              {"programs", programs}};
  if (!result.results.empty()) {
    doc["config"] = json_codec::ToJson(result.results.front().report)["config"];
  }
  return doc.dump(2) + "\n";
}

std::string RenderBatchReportLines(const BatchResult& result) {
  std::string out;
  for (const auto& r : result.results) {
    out += RenderReportJson(r.report, -1);
    out += '\n';
  }
  return out;
}

}  // namespace trigscan
