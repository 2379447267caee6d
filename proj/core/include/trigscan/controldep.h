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

// Logic-bomb decision: a suspicious check is a logic bomb when a statement it
// guards reaches a sensitive method, directly or through internal calls.
// A guarded write of a boolean constant to a field extends the search to the
// regions guarded by conditions on that field elsewhere.

#ifndef TRIGSCAN_CONTROLDEP_H_
#define TRIGSCAN_CONTROLDEP_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigscan/classify.h"
#include "trigscan/formula.h"
#include "trigscan/graphs.h"
#include "trigscan/lists.h"
#include "trigscan/model.h"
#include "trigscan/predicates.h"
#include "trigscan/symex.h"

namespace trigscan {

struct GuardedRegion {
  std::vector<StmtId> positive;  // formula contains the satisfied literal
  std::vector<StmtId> negative;  // formula contains the opposite literal
};

// Statements of the check's method whose minimized formula mentions `atom`
// with the given satisfied polarity (positive) or the other one (negative).
GuardedRegion GuardedInstructions(MethodId method, uint64_t atom,
                                  bool satisfied_on_taken,
                                  const MethodPredicates& predicates);

struct CallFrame {
  StmtId site;
  std::string site_label;  // "Class.method#index"
  std::string callee;      // invoked signature (target method for internal)
  bool operator==(const CallFrame&) const = default;
};

struct SensitiveCall {
  std::string signature;
  std::vector<CallFrame> stack;  // from the guarded statement to the call
  bool operator==(const SensitiveCall&) const = default;
};

struct LogicBombFinding {
  SuspiciousCheck check;
  std::string method;  // signature of the method holding the check
  std::string unit;
  std::string package;
  ComponentKind component = ComponentKind::kBasicClass;
  ComponentKind starting_component = ComponentKind::kBasicClass;
  std::vector<StmtId> guarded_stmts;
  std::vector<StmtId> negative_stmts;
  std::vector<SensitiveCall> sensitive_calls;
  std::optional<std::string> via_switch;  // simple field name
  std::vector<StmtId> switch_checks;      // conditions on the switch field
  bool nested = false;
  // Minimized predicate of the first witness statement.
  Formula formula;
  std::string formula_text;
  int formula_size = 0;
  int guarded_count = 0;
  // Minimized predicate of the check statement itself.
  Formula check_formula;
  bool partial = false;

  bool operator==(const LogicBombFinding&) const = default;
};

struct ControlDepOptions {
  int max_depth = 10;
  int switch_depth = 1;
  bool allow_prefix = false;
};

struct ControlDepInput {
  const WholeProgram* whole = nullptr;
  const CallGraph* calls = nullptr;
  const Icfg* icfg = nullptr;
  const SymexResult* symex = nullptr;
  const std::map<MethodId, MethodPredicates>* predicates = nullptr;
  // Post-filtered suspicious checks.
  const std::vector<SuspiciousCheck>* checks = nullptr;
};

struct ControlDepResult {
  std::vector<LogicBombFinding> findings;
  bool truncated = false;
};

ControlDepResult DetectLogicBombs(const ControlDepInput& input,
                                  const SensitiveList& sensitive,
                                  const ControlDepOptions& options,
                                  const Deadline& deadline = Deadline::Never());

// Display name of an atom key: "Class.method#index".
std::string AtomName(const MethodTable& table, uint64_t atom);

}  // namespace trigscan

#endif  // TRIGSCAN_CONTROLDEP_H_
