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

// trigscan: static logic-bomb scanner for TBIR programs.
//
// Exit codes: 0 no findings, 1 findings, 2 usage error, 3 analysis errors or
// timeouts (takes precedence over 1).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigscan/batch.h"
#include "trigscan/pipeline.h"
#include "trigscan/report.h"
#include "trigscan/sweep.h"
#include "trigscan/synthetic.h"

namespace {

namespace fs = std::filesystem;
using trigscan::AnalysisConfig;
using trigscan::AnalysisReport;
using trigscan::AnalysisStatus;

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailures = 3;

struct Flags {
  std::string sensitive_list;
  std::string catalog;
  std::string filters;
  std::string app_package;
  std::string lib_list;
  std::string callgraph = "cha";
  double timeout = 60;
  size_t atom_cap = 16;
  size_t formula_cap = 4096;
  int switch_depth = 1;
  int max_depth = 10;
  bool prefix_match = false;
  std::string report;
  std::string format = "json";
  int jobs = 1;
  uint64_t seed = 0;
  std::string dump_icfg;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void AddAnalysisFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--sensitive-list", f.sensitive_list,
                  "Sensitive method list file, or @full / @small");
  cmd->add_option("--catalog", f.catalog, "Environment model catalog file");
  cmd->add_option("--filters", f.filters, "Comma-separated: sym,pkg,lib");
  cmd->add_option("--app-package", f.app_package,
                  "App package prefix (default: inferred per program)");
  cmd->add_option("--lib-list", f.lib_list, "Library package prefix file");
  cmd->add_option("--callgraph", f.callgraph, "Call-graph algorithm")
      ->check(CLI::IsMember({"cha", "rta"}));
  cmd->add_option("--timeout", f.timeout,
                  "Per-program time limit in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--atom-cap", f.atom_cap,
                  "Largest atom count minimized exactly");
  cmd->add_option("--formula-cap", f.formula_cap,
                  "Largest recovered formula, in nodes");
  cmd->add_option("--switch-depth", f.switch_depth,
                  "Boolean-switch hops followed (0 disables)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-depth", f.max_depth, "Call depth searched for sinks")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--prefix-match", f.prefix_match,
                "Honor Class.* entries in the sensitive list");
}

void AddOutputFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--report", f.report, "Write output to this path");
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

std::shared_ptr<const trigscan::SensitiveList> LoadSensitive(
    const std::string& spec) {
  if (spec.empty() || spec == "@full") {
    return std::make_shared<trigscan::SensitiveList>(
        trigscan::SensitiveList::Full());
  }
  if (spec == "@small") {
    return std::make_shared<trigscan::SensitiveList>(
        trigscan::SensitiveList::Small());
  }
  return std::make_shared<trigscan::SensitiveList>(trigscan::SensitiveList::Parse(
      trigscan::ReadFile(spec), fs::path(spec).filename().string()));
}

AnalysisConfig BuildConfig(const Flags& f) {
  AnalysisConfig config;
  config.callgraph = f.callgraph == "rta" ? trigscan::CallGraphAlgorithm::kRta
                                          : trigscan::CallGraphAlgorithm::kCha;
  config.timeout_secs = f.timeout;
  config.predicates.atom_cap = f.atom_cap;
  config.predicates.formula_cap = f.formula_cap;
  config.controldep.switch_depth = f.switch_depth;
  config.controldep.max_depth = f.max_depth;
  config.controldep.allow_prefix = f.prefix_match;
  try {
    config.filters = trigscan::ParseFilterFlags(f.filters);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.filters.app_package = f.app_package;
  if (f.lib_list.empty()) {
    config.filters.library_prefixes = trigscan::DefaultLibraryPrefixes();
  } else {
    config.filters.library_prefixes =
        trigscan::ParseListLines(trigscan::ReadFile(f.lib_list));
    config.library_list_name = fs::path(f.lib_list).filename().string();
  }
  if (!f.catalog.empty()) {
    config.catalog = std::make_shared<trigscan::ModelCatalog>(
        trigscan::ModelCatalog::Parse(trigscan::ReadFile(f.catalog)));
    config.catalog_name = fs::path(f.catalog).filename().string();
  }
  config.sensitive = LoadSensitive(f.sensitive_list);
  return config;
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int ExitCodeFor(const std::vector<AnalysisReport>& reports) {
  bool findings = false;
  for (const auto& r : reports) {
    if (r.status != AnalysisStatus::kOk) return kExitFailures;
    findings |= r.flagged();
  }
  return findings ? kExitFindings : kExitClean;
}

int RunAnalyze(const Flags& f, const std::vector<std::string>& files) {
  const AnalysisConfig config = BuildConfig(f);
  const auto format = f.format == "text" ? trigscan::ReportFormat::kText
                                         : trigscan::ReportFormat::kJson;
  std::vector<AnalysisReport> reports;
  std::string out;
  for (const auto& file : files) {
    reports.push_back(trigscan::AnalyzeFile(file, config));
    if (format == trigscan::ReportFormat::kJson && files.size() > 1) {
      out += trigscan::RenderReportJson(reports.back(), -1) + "\n";
    } else {
      out += trigscan::RenderReport(reports.back(), format);
    }
  }
  WriteOutput(f.report, out);
  if (!f.dump_icfg.empty() && !files.empty()) {
    trigscan::Program program =
        trigscan::ParseProgram(trigscan::ReadFile(files.front()), files.front());
    auto prepared =
        trigscan::PreparedProgram::Prepare(std::move(program), config);
    WriteOutput(f.dump_icfg,
                prepared->icfg().ToDot(prepared->whole().table()));
  }
  return ExitCodeFor(reports);
}

int RunBatch(const Flags& f, const std::string& manifest_path,
             const std::string& lines_path, bool canonical) {
  const AnalysisConfig config = BuildConfig(f);
  const auto manifest = trigscan::CorpusManifest::Load(manifest_path);
  const auto result = trigscan::RunBatch(manifest, config, f.jobs);
  if (!lines_path.empty()) {
    WriteOutput(lines_path, trigscan::RenderBatchReportLines(result));
  }
  if (f.format == "text") {
    std::string text;
    for (const auto& r : result.results) {
      text += trigscan::RenderReportText(r.report) + "\n";
    }
    const auto& s = result.summary;
    text += "programs: " + std::to_string(s.programs) +
            "  ok: " + std::to_string(s.ok) +
            "  timeouts: " + std::to_string(s.timeouts) +
            "  errors: " + std::to_string(s.errors) + "\n";
    text += "fp: " + std::to_string(s.fp_rate) +
            "  fn: " + std::to_string(s.fn_rate) + "\n";
    if (!s.expected_mismatches.empty()) {
      text += "expected findings differ for:\n";
      for (const auto& id : s.expected_mismatches) text += "  " + id + "\n";
    }
    WriteOutput(f.report, text);
  } else {
    WriteOutput(f.report, trigscan::RenderBatchSummaryJson(result, !canonical));
  }
  std::vector<AnalysisReport> reports;
  for (const auto& r : result.results) reports.push_back(r.report);
  return ExitCodeFor(reports);
}

int RunSweep(const Flags& f, const std::string& manifest_path,
             size_t synthetic, const std::string& ordering, size_t steps,
             int repeats) {
  const AnalysisConfig config = BuildConfig(f);
  trigscan::CorpusManifest manifest;
  if (synthetic > 0) {
    manifest = trigscan::SyntheticManifest(trigscan::GenerateSyntheticCorpus(
        {synthetic, f.seed}));
  } else if (!manifest_path.empty()) {
    manifest = trigscan::CorpusManifest::Load(manifest_path);
  } else {
    throw UsageError("sweep needs a manifest or --synthetic N");
  }
  trigscan::SweepOptions options;
  options.ordering = *trigscan::ParseSweepOrdering(ordering);
  options.num_steps = steps;
  options.repeats = repeats;
  options.seed = f.seed;
  options.jobs = f.jobs;
  const auto& base = config.sensitive_or_default();
  const auto results =
      trigscan::SweepSensitiveList(manifest, config, base, options);
  WriteOutput(f.report, trigscan::RenderSweepJson(results, base));
  return kExitClean;
}

int RunDumpIcfg(const Flags& f, const std::string& file) {
  const AnalysisConfig config = BuildConfig(f);
  trigscan::Program program =
      trigscan::ParseProgram(trigscan::ReadFile(file), file);
  auto prepared = trigscan::PreparedProgram::Prepare(std::move(program), config);
  WriteOutput(f.report, prepared->icfg().ToDot(prepared->whole().table()));
  return kExitClean;
}

int RunSynth(size_t programs, uint64_t seed, const std::string& out_dir) {
  const auto corpus = trigscan::GenerateSyntheticCorpus({programs, seed});
  fs::create_directories(out_dir);
  std::string manifest =
      "# Generated corpus: path, label, expected descriptors\n";
  for (const auto& p : corpus) {
    const std::string file = fs::path(p.name).filename().string();
    WriteOutput((fs::path(out_dir) / file).string(), p.text);
    manifest += file + "\t" + std::string(trigscan::LabelName(p.label));
    if (p.expected) {
      if (p.expected->empty()) manifest += "\t-";
      for (const auto& d : *p.expected) manifest += "\t" + d;
    }
    manifest += "\n";
  }
  WriteOutput((fs::path(out_dir) / "manifest.tsv").string(), manifest);
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigscan: static detection of time, location and SMS "
               "triggered logic bombs in TBIR programs"};
  app.require_subcommand(1);
  Flags flags;

  std::vector<std::string> files;
  auto* analyze = app.add_subcommand("analyze", "Analyze TBIR programs");
  AddAnalysisFlags(analyze, flags);
  AddOutputFlags(analyze, flags);
  analyze->add_option("--dump-icfg", flags.dump_icfg,
                      "Also write the first program's ICFG (Graphviz)");
  analyze->add_option("files", files, "TBIR files")->required();

  std::string manifest;
  std::string lines_path;
  bool canonical = false;
  auto* batch = app.add_subcommand("batch", "Analyze a labeled corpus");
  AddAnalysisFlags(batch, flags);
  AddOutputFlags(batch, flags);
  batch->add_option("--jobs", flags.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  batch->add_option("--seed", flags.seed, "Seed (recorded for provenance)");
  batch->add_option("--reports", lines_path,
                    "Write one JSON report per line to this path");
  batch->add_flag("--canonical", canonical,
                  "Omit wall-clock fields from the summary");
  batch->add_option("manifest", manifest, "Manifest file")->required();

  std::string ordering = "random";
  size_t steps = 10;
  int repeats = 1;
  size_t synthetic = 0;
  auto* sweep = app.add_subcommand(
      "sweep", "FP/FN rates as sensitive methods are removed");
  AddAnalysisFlags(sweep, flags);
  sweep->add_option("--report", flags.report, "Write output to this path");
  sweep->add_option("--jobs", flags.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", flags.seed, "Shuffle seed");
  sweep->add_option("--ordering", ordering, "Removal order")
      ->check(CLI::IsMember({"random", "most-used"}));
  sweep->add_option("--steps", steps, "Number of evenly spaced steps")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--repeats", repeats, "Random orderings to average")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--synthetic", synthetic,
                    "Use N generated programs instead of a manifest");
  sweep->add_option("manifest", manifest, "Manifest file");

  std::string icfg_file;
  auto* dump = app.add_subcommand("dump-icfg", "Print the ICFG as Graphviz");
  AddAnalysisFlags(dump, flags);
  dump->add_option("--report", flags.report, "Write output to this path");
  dump->add_option("file", icfg_file, "TBIR file")->required();

  size_t synth_programs = 40;
  std::string synth_out;
  auto* synth =
      app.add_subcommand("synth", "Write a generated corpus and manifest");
  synth->add_option("--programs", synth_programs, "Program count")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", flags.seed, "Generator seed");
  synth->add_option("out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*analyze) return RunAnalyze(flags, files);
    if (*batch) return RunBatch(flags, manifest, lines_path, canonical);
    if (*sweep) {
      return RunSweep(flags, manifest, synthetic, ordering, steps, repeats);
    }
    if (*dump) return RunDumpIcfg(flags, icfg_file);
    if (*synth) return RunSynth(synth_programs, flags.seed, synth_out);
  } catch (const UsageError& e) {
    std::cerr << "trigscan: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "trigscan: " << e.what() << "\n";
    return kExitFailures;
  }
  return kExitUsage;
}
