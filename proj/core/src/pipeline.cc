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

#include "trigscan/pipeline.h"

#include <chrono>
#include <exception>
#include <utility>

namespace trigscan {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Deadline DeadlineFor(const AnalysisConfig& config) {
  return config.timeout_secs > 0 ? Deadline::After(config.timeout_secs)
                                 : Deadline::Never();
}

AnalysisReport ErrorReport(std::string source_id, const AnalysisConfig& config,
                           std::string message) {
  AnalysisReport report;
  report.source_id = std::move(source_id);
  report.status = AnalysisStatus::kError;
  report.error = std::move(message);
  report.config = EchoConfig(config, config.sensitive_or_default(),
                             config.filters.app_package);
  return report;
}

}  // namespace

const ModelCatalog& AnalysisConfig::catalog_or_default() const {
  return catalog ? *catalog : ModelCatalog::Default();
}

const SensitiveList& AnalysisConfig::sensitive_or_default() const {
  return sensitive ? *sensitive : SensitiveList::Full();
}

ConfigEcho EchoConfig(const AnalysisConfig& config,
                      const SensitiveList& sensitive,
                      const std::string& app_package) {
  ConfigEcho echo;
  echo.callgraph = std::string(CallGraphAlgorithmName(config.callgraph));
  for (auto kind :
       {FilterKind::kSymbolic, FilterKind::kPackage, FilterKind::kLibrary}) {
    if (config.filters.enabled(kind)) {
      echo.filters.emplace_back(FilterKindName(kind));
    }
  }
  echo.app_package = app_package;
  echo.library_list = config.library_list_name;
  echo.library_list_size = config.filters.library_prefixes.size();
  echo.sensitive_list = sensitive.name();
  echo.sensitive_list_size = sensitive.size();
  echo.catalog = config.catalog_name;
  echo.atom_cap = config.predicates.atom_cap;
  echo.formula_cap = config.predicates.formula_cap;
  echo.switch_depth = config.controldep.switch_depth;
  echo.max_depth = config.controldep.max_depth;
  echo.timeout_secs = config.timeout_secs;
  echo.prefix_match = config.controldep.allow_prefix;
  return echo;
}

std::unique_ptr<PreparedProgram> PreparedProgram::Prepare(
    Program program, const AnalysisConfig& config, const Deadline& deadline) {
  std::unique_ptr<PreparedProgram> p(new PreparedProgram());

  auto start = Clock::now();
  p->whole_ = std::make_unique<WholeProgram>(std::move(program));
  p->calls_ = BuildCallGraph(*p->whole_, config.callgraph);
  p->icfg_ = BuildIcfg(*p->whole_, p->calls_);
  p->phases_.graphs_ms = MillisSince(start);
  p->diagnostics_ = p->whole_->entry().diagnostics;

  start = Clock::now();
  p->symex_ = RunSymbolicExecution(*p->whole_, p->calls_, p->icfg_,
                                   config.catalog_or_default(), deadline);
  p->truncated_ |= p->symex_.truncated;
  p->phases_.symex_ms = MillisSince(start);

  start = Clock::now();
  const auto& conditions = p->icfg_.conditions();
  for (MethodId m : p->icfg_.methods()) {
    const Cfg& cfg = p->icfg_.cfg(m);
    auto annotations = AnnotateEdges(cfg, m, [&](uint32_t index) {
      return conditions.count(StmtId{m, index}) != 0;
    });
    MethodPredicates preds =
        RecoverMethodPredicates(cfg, annotations, config.predicates, deadline);
    p->truncated_ |= preds.truncated;
    p->predicates_.emplace(m, std::move(preds));
  }
  p->phases_.predicate_recovery_ms = MillisSince(start);

  start = Clock::now();
  PostFilterResult post = PostFilter(Classify(p->symex_.conditions));
  p->checks_ = std::move(post.kept);
  p->post_filtered_ = std::move(post.removed);
  p->phases_.classification_ms = MillisSince(start);

  p->app_package_ = config.filters.app_package.empty()
                        ? InferAppPackage(p->whole_->program())
                        : config.filters.app_package;
  return p;
}

AnalysisReport PreparedProgram::Finish(const AnalysisConfig& config,
                                       const SensitiveList& sensitive,
                                       const Deadline& deadline) const {
  AnalysisReport report;
  report.source_id = whole_->program().source_id;
  report.phases = phases_;
  report.diagnostics = diagnostics_;
  report.post_filtered = post_filtered_;
  report.config = EchoConfig(config, sensitive, app_package_);

  auto start = Clock::now();
  ControlDepInput input{whole_.get(), &calls_,       &icfg_,
                        &symex_,      &predicates_,  &checks_};
  ControlDepResult detected =
      DetectLogicBombs(input, sensitive, config.controldep, deadline);
  report.phases.controldep_ms = MillisSince(start);

  start = Clock::now();
  FilterConfig filters = config.filters;
  filters.app_package = app_package_;
  FilterResult filtered = ApplyFilters(detected.findings, filters);
  report.findings = std::move(filtered.kept);
  report.filtered = std::move(filtered.removed);
  report.phases.filters_ms = MillisSince(start);

  bool truncated = truncated_ || detected.truncated;
  report.partial = truncated;
  for (const auto& f : report.findings) report.partial |= f.partial;
  if (truncated) {
    report.status = AnalysisStatus::kTimeout;
    report.error = "analysis exceeded the time limit; findings are partial";
  }
  return report;
}

AnalysisReport AnalyzeProgram(Program program, const AnalysisConfig& config) {
  auto start = Clock::now();
  std::string source_id = program.source_id;
  Deadline deadline = DeadlineFor(config);
  AnalysisReport report;
  try {
    auto prepared =
        PreparedProgram::Prepare(std::move(program), config, deadline);
    report = prepared->Finish(config, config.sensitive_or_default(), deadline);
  } catch (const std::exception& e) {
    report = ErrorReport(source_id, config, e.what());
  }
  report.duration_ms = MillisSince(start);
  return report;
}

AnalysisReport AnalyzeSource(std::string_view text, std::string source_id,
                             const AnalysisConfig& config) {
  auto start = Clock::now();
  Program program;
  try {
    program = ParseProgram(text, source_id);
  } catch (const std::exception& e) {
    AnalysisReport report = ErrorReport(source_id, config, e.what());
    report.duration_ms = MillisSince(start);
    return report;
  }
  AnalysisReport report = AnalyzeProgram(std::move(program), config);
  report.duration_ms = MillisSince(start);
  return report;
}

AnalysisReport AnalyzeFile(const std::string& path,
                           const AnalysisConfig& config) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const std::exception& e) {
    return ErrorReport(path, config, e.what());
  }
  return AnalyzeSource(text, path, config);
}

}  // namespace trigscan
