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

// Whole-program entry model. Component lifecycle methods are driven from a
// synthetic dummy main whose branches are opaque, so every invocation order
// of the lifecycle methods is a path through it.

#ifndef TRIGSCAN_MODEL_H_
#define TRIGSCAN_MODEL_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/ir.h"

namespace trigscan {

inline constexpr std::string_view kDummyMainSignature = "<dummy>.main";

// Recognized lifecycle method names, in invocation order.
const std::vector<std::string>& LifecycleMethods(ComponentKind kind);

struct LifecycleBinding {
  std::string unit;                  // qualified name
  std::vector<std::string> methods;  // declared lifecycle methods, ordered
  bool operator==(const LifecycleBinding&) const = default;
};

struct EntryModel {
  MethodDef dummy_main;
  std::vector<LifecycleBinding> lifecycle_bindings;
  // Indices of the opaque branches in dummy_main.body.
  std::set<uint32_t> opaque_branches;
  std::vector<std::string> diagnostics;
};

EntryModel BuildEntryModel(const Program& program);

// A parsed program together with its entry model, method table, class
// hierarchy and callee resolutions. Not copyable: the table refers into the
// program and the entry model.
class WholeProgram {
 public:
  explicit WholeProgram(Program program);
  WholeProgram(const WholeProgram&) = delete;
  WholeProgram& operator=(const WholeProgram&) = delete;

  const Program& program() const { return program_; }
  const EntryModel& entry() const { return entry_; }
  const MethodTable& table() const { return table_; }
  const ClassHierarchy& hierarchy() const { return hierarchy_; }
  const ResolutionTable& resolutions() const { return resolutions_; }
  const CalleeResolution* resolution(StmtId site) const;

  MethodId dummy_main() const { return dummy_main_; }
  bool IsOpaque(StmtId id) const;

 private:
  Program program_;
  EntryModel entry_;
  MethodTable table_;
  ClassHierarchy hierarchy_;
  MethodId dummy_main_;
  ResolutionTable resolutions_;
};

}  // namespace trigscan

#endif  // TRIGSCAN_MODEL_H_
