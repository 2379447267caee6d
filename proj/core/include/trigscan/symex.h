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

// Value modeling over the ICFG. Locals are tracked flow-sensitively along
// each method's CFG (disagreeing values meet at Opaque); parameters, return
// values and fields use a bottom / value / top lattice merged over all
// writes, iterated to a whole-program fixpoint.

#ifndef TRIGSCAN_SYMEX_H_
#define TRIGSCAN_SYMEX_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/deadline.h"
#include "trigscan/graphs.h"
#include "trigscan/model.h"
#include "trigscan/sym_value.h"

namespace trigscan {

struct CatalogAction {
  enum class Kind {
    kTag,     // result is a fresh tagged value (arg = tag path)
    kStrOp,   // string operation (arg = operation name)
    kCmp,     // comparison over tagged values (arg = operation name)
    kDerive,  // result keeps the tag of its tagged argument
  };
  Kind kind = Kind::kTag;
  std::string arg;
  bool operator==(const CatalogAction&) const = default;
};

// External-method models, keyed by dotted signature (`Cls.<init>` for
// constructors). Text form, one per line:
//
//   java.util.Date.<init> -> tag:#now
//   java.lang.String.startsWith -> strop:startsWith
//   java.util.Date.after -> cmp:after
//   java.util.concurrent.TimeUnit.toDays -> derive
class ModelCatalog {
 public:
  // Throws std::invalid_argument on malformed lines or duplicate signatures.
  static ModelCatalog Parse(std::string_view text);
  static const ModelCatalog& Default();

  const CatalogAction* Find(std::string_view signature) const;
  size_t size() const { return actions_.size(); }

 private:
  std::map<std::string, CatalogAction, std::less<>> actions_;
};

// String operations modeled concretely. Receiver-style operations take the
// receiver as args[0]. Returns nullopt for unsupported operations, wrong
// operand kinds, and inputs where the operation would throw.
std::optional<SymValue> EvalStringOp(std::string_view op,
                                     const std::vector<SymValue>& args);
// True for string operations whose result is a predicate or measurement of
// the receiver (startsWith, equals, length, ...) rather than a new string.
bool IsStringPredicateOp(std::string_view op);

// Values of one reachable IfGoto.
struct AtomicCondition {
  StmtId id;
  SymValue lhs;
  RelOp relop = RelOp::kEq;
  SymValue rhs;
  // Field a side was loaded from, "Owner.name", or empty.
  std::string lhs_field;
  std::string rhs_field;
};

struct FieldWrite {
  std::string field;  // "Owner.name"
  SymValue value;
};

struct SymexResult {
  std::map<StmtId, AtomicCondition> conditions;  // every c in C_r
  std::map<StmtId, FieldWrite> field_writes;
  // Values of locals read at each reachable statement.
  std::map<StmtId, std::vector<std::pair<std::string, SymValue>>> reads;
  // Final field lattice: values for single-valued fields, Opaque for top.
  std::map<std::string, SymValue> fields;
  bool truncated = false;
};

SymexResult RunSymbolicExecution(const WholeProgram& whole,
                                 const CallGraph& calls, const Icfg& icfg,
                                 const ModelCatalog& catalog,
                                 const Deadline& deadline = Deadline::Never());

}  // namespace trigscan

#endif  // TRIGSCAN_SYMEX_H_
