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

#include "trigscan/ir.h"

#include <algorithm>
#include <set>

namespace trigscan {

std::string_view ComponentKindName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kActivity:
      return "Activity";
    case ComponentKind::kService:
      return "Service";
    case ComponentKind::kBroadcastReceiver:
      return "BroadcastReceiver";
    case ComponentKind::kContentProvider:
      return "ContentProvider";
    case ComponentKind::kBasicClass:
      return "BasicClass";
  }
  return "BasicClass";
}

std::string_view ComponentKindShortName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kActivity:
      return "A";
    case ComponentKind::kService:
      return "S";
    case ComponentKind::kBroadcastReceiver:
      return "BR";
    case ComponentKind::kContentProvider:
      return "CP";
    case ComponentKind::kBasicClass:
      return "BC";
  }
  return "BC";
}

std::optional<ComponentKind> ParseComponentKind(std::string_view text) {
  for (ComponentKind kind : kAllComponentKinds) {
    if (ComponentKindName(kind) == text) return kind;
  }
  return std::nullopt;
}

namespace {

std::string FormatPos(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& expected,
                       const std::string& found)
    : std::runtime_error(FormatPos(pos) + ": expected " + expected +
                         ", found " + found),
      pos_(pos),
      expected_(expected) {}

DuplicateName::DuplicateName(SourcePos pos, const std::string& what,
                             const std::string& name)
    : std::runtime_error(FormatPos(pos) + ": duplicate " + what + " '" + name +
                         "'"),
      pos_(pos) {}

UnresolvedLabel::UnresolvedLabel(SourcePos pos, const std::string& label)
    : std::runtime_error(FormatPos(pos) + ": unresolved label '" + label + "'"),
      pos_(pos) {}

std::string_view RelOpText(RelOp op) {
  switch (op) {
    case RelOp::kEq:
      return "==";
    case RelOp::kNe:
      return "!=";
    case RelOp::kLt:
      return "<";
    case RelOp::kLe:
      return "<=";
    case RelOp::kGt:
      return ">";
    case RelOp::kGe:
      return ">=";
  }
  return "==";
}

std::string_view BinOpText(BinOp op) {
  switch (op) {
    case BinOp::kAdd:
      return "+";
    case BinOp::kSub:
      return "-";
    case BinOp::kMul:
      return "*";
    case BinOp::kConcat:
      return "concat";
  }
  return "+";
}

RelOp NegateRelOp(RelOp op) {
  switch (op) {
    case RelOp::kEq:
      return RelOp::kNe;
    case RelOp::kNe:
      return RelOp::kEq;
    case RelOp::kLt:
      return RelOp::kGe;
    case RelOp::kLe:
      return RelOp::kGt;
    case RelOp::kGt:
      return RelOp::kLe;
    case RelOp::kGe:
      return RelOp::kLt;
  }
  return op;
}

RelOp SwapRelOp(RelOp op) {
  switch (op) {
    case RelOp::kLt:
      return RelOp::kGt;
    case RelOp::kLe:
      return RelOp::kGe;
    case RelOp::kGt:
      return RelOp::kLt;
    case RelOp::kGe:
      return RelOp::kLe;
    default:
      return op;
  }
}

std::string InvokeExpr::Signature() const {
  if (kind == InvokeKind::kNew) return callee + ".<init>";
  return callee;
}

std::string InvokeExpr::ClassName() const {
  if (kind == InvokeKind::kNew) return callee;
  return PackageOf(callee);
}

std::string InvokeExpr::MethodName() const {
  if (kind == InvokeKind::kNew) return "<init>";
  auto dot = callee.rfind('.');
  return dot == std::string::npos ? callee : callee.substr(dot + 1);
}

const InvokeExpr* Stmt::Invocation() const {
  if (auto* invoke = std::get_if<InvokeStmt>(&node)) return &invoke->call;
  if (auto* assign = std::get_if<AssignStmt>(&node)) {
    return std::get_if<InvokeExpr>(&assign->rhs);
  }
  return nullptr;
}

const MethodDef* ClassUnit::FindMethod(std::string_view name) const {
  for (const auto& m : methods) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const VarDecl* ClassUnit::FindField(std::string_view name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::vector<std::string> ClassUnit::Supers() const {
  std::vector<std::string> out;
  if (!parent.empty()) out.push_back(parent);
  out.insert(out.end(), interfaces.begin(), interfaces.end());
  return out;
}

const ClassUnit* Program::FindUnit(std::string_view qualified_name) const {
  for (const auto& u : units) {
    if (u.qualified_name == qualified_name) return &u;
  }
  return nullptr;
}

std::string PackageOf(std::string_view qualified_name) {
  auto dot = qualified_name.rfind('.');
  if (dot == std::string_view::npos) return "";
  return std::string(qualified_name.substr(0, dot));
}

// ---------------------------------------------------------------------------

MethodTable::MethodTable(const Program& program) : program_(&program) {
  for (const auto& unit : program.units) {
    for (const auto& method : unit.methods) {
      std::string sig = unit.qualified_name + "." + method.name;
      by_signature_.emplace(sig, static_cast<MethodId>(entries_.size()));
      entries_.push_back({&unit, &method, std::move(sig)});
    }
  }
}

MethodId MethodTable::AddSynthetic(std::string signature,
                                   const MethodDef* method) {
  auto id = static_cast<MethodId>(entries_.size());
  by_signature_.emplace(signature, id);
  entries_.push_back({nullptr, method, std::move(signature)});
  return id;
}

std::optional<MethodId> MethodTable::Find(std::string_view signature) const {
  auto it = by_signature_.find(signature);
  if (it == by_signature_.end()) return std::nullopt;
  return it->second;
}

std::string MethodTable::StmtLabel(StmtId id) const {
  return signature(id.method) + "#" + std::to_string(id.index);
}

// ---------------------------------------------------------------------------

ClassHierarchy::ClassHierarchy(const Program& program, const MethodTable& table)
    : program_(&program), table_(&table) {
  for (const auto& unit : program.units) {
    units_.emplace(unit.qualified_name, &unit);
  }
  for (const auto& unit : program.units) {
    for (const auto& super : unit.Supers()) {
      direct_subs_[super].push_back(unit.qualified_name);
    }
  }
}

bool ClassHierarchy::IsDeclared(std::string_view name) const {
  return units_.find(name) != units_.end();
}

std::vector<std::string> ClassHierarchy::SubtypesOf(
    std::string_view name) const {
  std::set<std::string> seen;
  std::vector<std::string> work{std::string(name)};
  while (!work.empty()) {
    std::string current = std::move(work.back());
    work.pop_back();
    if (!seen.insert(current).second) continue;
    auto it = direct_subs_.find(current);
    if (it == direct_subs_.end()) continue;
    for (const auto& sub : it->second) work.push_back(sub);
  }
  return {seen.begin(), seen.end()};
}

std::optional<MethodId> ClassHierarchy::Lookup(
    std::string_view class_name, std::string_view method_name) const {
  std::set<std::string, std::less<>> visited;
  std::string current(class_name);
  while (!current.empty() && visited.insert(current).second) {
    auto it = units_.find(current);
    if (it == units_.end()) return std::nullopt;
    if (it->second->FindMethod(method_name) != nullptr) {
      return table_->Find(current + "." + std::string(method_name));
    }
    current = it->second->parent;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ResolutionTable ResolveCallees(const MethodTable& table,
                               const ClassHierarchy& hierarchy) {
  ResolutionTable out;
  for (MethodId m = 0; m < table.size(); ++m) {
    const auto& body = table.method(m).body;
    for (uint32_t i = 0; i < body.size(); ++i) {
      const InvokeExpr* call = body[i].Invocation();
      if (call == nullptr) continue;
      CalleeResolution res;
      res.kind = call->kind;
      res.signature = call->Signature();
      const std::string cls = call->ClassName();
      const std::string name = call->MethodName();
      switch (call->kind) {
        case InvokeKind::kNew:
          if (hierarchy.IsDeclared(cls)) {
            res.internal = true;
            res.instantiated_class = cls;
          }
          break;
        case InvokeKind::kStatic:
          if (auto target = hierarchy.Lookup(cls, name)) {
            res.internal = true;
            res.candidates.push_back(*target);
          } else if (auto synthetic = table.Find(res.signature);
                     synthetic && table.unit(*synthetic) == nullptr) {
            res.internal = true;
            res.candidates.push_back(*synthetic);
          }
          break;
        case InvokeKind::kVirtual:
          if (hierarchy.IsDeclared(cls)) {
            std::set<MethodId> targets;
            for (const auto& sub : hierarchy.SubtypesOf(cls)) {
              if (auto target = hierarchy.Lookup(sub, name)) {
                targets.insert(*target);
              }
            }
            res.candidates.assign(targets.begin(), targets.end());
            res.internal = !res.candidates.empty();
          }
          break;
      }
      out.emplace(StmtId{m, i}, std::move(res));
    }
  }
  return out;
}

ResolutionTable ResolveCallees(const Program& program) {
  MethodTable table(program);
  ClassHierarchy hierarchy(program, table);
  return ResolveCallees(table, hierarchy);
}

}  // namespace trigscan
