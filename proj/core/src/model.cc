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

#include "trigscan/model.h"

#include <map>

namespace trigscan {

const std::vector<std::string>& LifecycleMethods(ComponentKind kind) {
  static const std::map<ComponentKind, std::vector<std::string>> kMethods = {
      {ComponentKind::kActivity,
       {"onCreate", "onStart", "onResume", "onPause", "onStop", "onDestroy"}},
      {ComponentKind::kService, {"onCreate", "onStartCommand", "onDestroy"}},
      {ComponentKind::kBroadcastReceiver, {"onReceive"}},
      {ComponentKind::kContentProvider, {"onCreate"}},
      {ComponentKind::kBasicClass, {}},
  };
  return kMethods.at(kind);
}

namespace {

Stmt MakeStmt(StmtNode node, std::optional<std::string> label = std::nullopt) {
  Stmt stmt;
  stmt.label = std::move(label);
  stmt.node = std::move(node);
  return stmt;
}

IfGotoStmt OpaqueBranch(const std::string& target) {
  IfGotoStmt branch;
  branch.lhs = Local{"opaque"};
  branch.relop = RelOp::kEq;
  branch.rhs = Constant::Int(0);
  branch.target = target;
  return branch;
}

}  // namespace

// Shape of the generated method:
//
//   Lloop: if opaque == 0 goto Lend
//          if opaque == 0 goto Lskip0
//          call U.onCreate(arg0, ...)
//   Lskip0: if opaque == 0 goto Lskip1
//          ...
//   LskipN: goto Lloop
//   Lend:   return
EntryModel BuildEntryModel(const Program& program) {
  EntryModel model;
  model.dummy_main.name = "main";
  model.dummy_main.locals.push_back({"opaque", "int"});
  for (const auto& unit : program.units) {
    LifecycleBinding binding{unit.qualified_name, {}};
    for (const auto& name : LifecycleMethods(unit.kind)) {
      if (unit.FindMethod(name) != nullptr) binding.methods.push_back(name);
    }
    if (!binding.methods.empty()) {
      model.lifecycle_bindings.push_back(std::move(binding));
    }
  }

  auto& body = model.dummy_main.body;
  if (model.lifecycle_bindings.empty()) {
    model.diagnostics.push_back(
        "no component declares a recognized lifecycle method; the entry model "
        "reaches nothing");
    body.push_back(MakeStmt(ReturnStmt{}));
    return model;
  }

  std::optional<std::string> pending_label = "Lloop";
  auto emit = [&](StmtNode node) {
    body.push_back(MakeStmt(std::move(node), std::move(pending_label)));
    pending_label.reset();
    return static_cast<uint32_t>(body.size() - 1);
  };

  model.opaque_branches.insert(emit(OpaqueBranch("Lend")));
  size_t skip = 0;
  size_t arg_counter = 0;
  for (const auto& binding : model.lifecycle_bindings) {
    const ClassUnit* unit = program.FindUnit(binding.unit);
    for (const auto& name : binding.methods) {
      std::string skip_label = "Lskip" + std::to_string(skip++);
      model.opaque_branches.insert(emit(OpaqueBranch(skip_label)));
      InvokeExpr call;
      call.kind = InvokeKind::kStatic;
      call.callee = binding.unit + "." + name;
      for (const auto& param : unit->FindMethod(name)->params) {
        std::string arg = "arg" + std::to_string(arg_counter++);
        model.dummy_main.locals.push_back({arg, param.type});
        call.args.push_back(Local{arg});
      }
      emit(InvokeStmt{std::move(call)});
      pending_label = skip_label;
    }
  }
  emit(GotoStmt{"Lloop", 0});
  pending_label = "Lend";
  emit(ReturnStmt{});

  std::map<std::string, uint32_t> labels;
  for (uint32_t i = 0; i < body.size(); ++i) {
    if (body[i].label) labels[*body[i].label] = i;
  }
  for (auto& stmt : body) {
    if (auto* branch = std::get_if<IfGotoStmt>(&stmt.node)) {
      branch->target_index = labels.at(branch->target);
    } else if (auto* jump = std::get_if<GotoStmt>(&stmt.node)) {
      jump->target_index = labels.at(jump->target);
    }
  }
  return model;
}

WholeProgram::WholeProgram(Program program)
    : program_(std::move(program)),
      entry_(BuildEntryModel(program_)),
      table_(program_),
      hierarchy_(program_, table_),
      dummy_main_(table_.AddSynthetic(std::string(kDummyMainSignature),
                                      &entry_.dummy_main)),
      resolutions_(ResolveCallees(table_, hierarchy_)) {}

const CalleeResolution* WholeProgram::resolution(StmtId site) const {
  auto it = resolutions_.find(site);
  return it == resolutions_.end() ? nullptr : &it->second;
}

bool WholeProgram::IsOpaque(StmtId id) const {
  return id.method == dummy_main_ && entry_.opaque_branches.count(id.index);
}

}  // namespace trigscan
