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

// Intraprocedural path predicates: every edge leaving a condition is
// annotated with the condition (taken edge positive, fall-through negative),
// and the predicate of statement i is
//
//   f(entry) = true
//   f(i)     = OR over predecessors x of  f(x) AND annotation(x -> i)
//
// Loop back edges (retreating edges of a depth-first search from the entry)
// are left out, so f(i) describes the acyclic paths from the entry to i.

#ifndef TRIGSCAN_PREDICATES_H_
#define TRIGSCAN_PREDICATES_H_

#include <functional>
#include <optional>
#include <vector>

#include "trigscan/deadline.h"
#include "trigscan/formula.h"
#include "trigscan/graphs.h"

namespace trigscan {

struct EdgeAnnotation {
  bool constrained = false;
  uint64_t atom = 0;  // StmtId::Key() of the source condition
  bool positive = true;
  bool operator==(const EdgeAnnotation&) const = default;
};

// One annotation per cfg.edges() entry. `is_condition` says which IfGoto
// statements are conditions (opaque branches are not).
std::vector<EdgeAnnotation> AnnotateEdges(
    const Cfg& cfg, MethodId method,
    const std::function<bool(uint32_t)>& is_condition);

// Edge indices that close a cycle (retreating edges of a DFS from the
// entry that visits successors in edge order).
std::vector<bool> BackEdges(const Cfg& cfg);

struct PredicateOptions {
  size_t formula_cap = 4096;  // max nodes per recovered formula
  size_t atom_cap = 16;       // exact minimization limit
};

struct StmtPredicate {
  enum class Status { kOk, kUnreachable, kUnknown };
  Status status = Status::kUnreachable;
  Formula raw;        // before minimization
  Formula minimized;  // equivalent to raw
  bool partially_minimized = false;
};

struct MethodPredicates {
  std::vector<StmtPredicate> stmts;  // indexed by statement
  bool truncated = false;            // deadline hit
};

// Raw path predicates only (unknown = nullopt when the cap is exceeded or the
// statement is unreachable).
std::vector<std::optional<Formula>> RecoverPathPredicates(
    const Cfg& cfg, const std::vector<EdgeAnnotation>& annotations,
    size_t formula_cap = 4096);

MethodPredicates RecoverMethodPredicates(
    const Cfg& cfg, const std::vector<EdgeAnnotation>& annotations,
    const PredicateOptions& options,
    const Deadline& deadline = Deadline::Never());

}  // namespace trigscan

#endif  // TRIGSCAN_PREDICATES_H_
