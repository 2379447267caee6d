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

// End-to-end analysis of one program: graphs, symbolic execution, predicate
// recovery, classification, control-dependency check and filters.

#ifndef TRIGSCAN_PIPELINE_H_
#define TRIGSCAN_PIPELINE_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/classify.h"
#include "trigscan/controldep.h"
#include "trigscan/deadline.h"
#include "trigscan/filters.h"
#include "trigscan/graphs.h"
#include "trigscan/lists.h"
#include "trigscan/model.h"
#include "trigscan/predicates.h"
#include "trigscan/report.h"
#include "trigscan/symex.h"

namespace trigscan {

struct AnalysisConfig {
  CallGraphAlgorithm callgraph = CallGraphAlgorithm::kCha;
  double timeout_secs = 60;  // <= 0 disables the limit
  PredicateOptions predicates;
  ControlDepOptions controldep;
  FilterConfig filters;
  // Null selects the built-in defaults.
  std::shared_ptr<const ModelCatalog> catalog;
  std::shared_ptr<const SensitiveList> sensitive;
  std::string catalog_name = "builtin";
  std::string library_list_name = "builtin";

  const ModelCatalog& catalog_or_default() const;
  const SensitiveList& sensitive_or_default() const;
};

// Echo of `config` as it appears in reports. `app_package` is the resolved
// one.
ConfigEcho EchoConfig(const AnalysisConfig& config,
                      const SensitiveList& sensitive,
                      const std::string& app_package);

// The list-independent part of an analysis, reusable across sensitive lists.
class PreparedProgram {
 public:
  // Runs everything up to classification. Throws on malformed programs;
  // deadline expiry is recorded in `truncated()`.
  static std::unique_ptr<PreparedProgram> Prepare(
      Program program, const AnalysisConfig& config,
      const Deadline& deadline = Deadline::Never());

  // Control-dependency check and filters against `sensitive`.
  AnalysisReport Finish(const AnalysisConfig& config,
                        const SensitiveList& sensitive,
                        const Deadline& deadline = Deadline::Never()) const;

  const WholeProgram& whole() const { return *whole_; }
  const CallGraph& calls() const { return calls_; }
  const Icfg& icfg() const { return icfg_; }
  const SymexResult& symex() const { return symex_; }
  const std::map<MethodId, MethodPredicates>& predicates() const {
    return predicates_;
  }
  const std::vector<SuspiciousCheck>& checks() const { return checks_; }
  const std::vector<RemovedCheck>& post_filtered() const {
    return post_filtered_;
  }
  const std::string& app_package() const { return app_package_; }
  bool truncated() const { return truncated_; }

 private:
  PreparedProgram() = default;

  std::unique_ptr<WholeProgram> whole_;
  CallGraph calls_;
  Icfg icfg_;
  SymexResult symex_;
  std::map<MethodId, MethodPredicates> predicates_;
  std::vector<SuspiciousCheck> checks_;
  std::vector<RemovedCheck> post_filtered_;
  std::string app_package_;
  bool truncated_ = false;
  PhaseDurations phases_;
  std::vector<std::string> diagnostics_;
};

AnalysisReport AnalyzeProgram(Program program, const AnalysisConfig& config);

// Parses and analyzes; parse and name-resolution errors become an `error`
// report rather than an exception.
AnalysisReport AnalyzeSource(std::string_view text, std::string source_id,
                             const AnalysisConfig& config);

AnalysisReport AnalyzeFile(const std::string& path,
                           const AnalysisConfig& config);

}  // namespace trigscan

#endif  // TRIGSCAN_PIPELINE_H_
