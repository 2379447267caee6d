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

// TBIR: a line-oriented three-address representation of component-structured
// programs. One statement per line, labels are `NAME:` prefixes, external
// methods are referenced by fully-qualified dotted signatures.
//
//   class com.example.Main kind Activity extends android.app.Activity {
//     field armed : bool
//     method onStart(this: com.example.Main) {
//       now = new java.util.Date()
//       ...
//     Lend: return
//     }
//   }

#ifndef TRIGSCAN_IR_H_
#define TRIGSCAN_IR_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trigscan {

enum class ComponentKind {
  kActivity,
  kService,
  kBroadcastReceiver,
  kContentProvider,
  kBasicClass,
};

inline constexpr ComponentKind kAllComponentKinds[] = {
    ComponentKind::kActivity, ComponentKind::kService,
    ComponentKind::kBroadcastReceiver, ComponentKind::kContentProvider,
    ComponentKind::kBasicClass};

// "Activity", "Service", ...; the TBIR spelling.
std::string_view ComponentKindName(ComponentKind kind);
// "A", "S", "BR", "CP", "BC"; used by histograms.
std::string_view ComponentKindShortName(ComponentKind kind);
std::optional<ComponentKind> ParseComponentKind(std::string_view text);

struct SourcePos {
  int line = 0;
  int column = 0;
  auto operator<=>(const SourcePos&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& expected,
             const std::string& found);
  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string expected_;
};

class DuplicateName : public std::runtime_error {
 public:
  DuplicateName(SourcePos pos, const std::string& what, const std::string& name);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class UnresolvedLabel : public std::runtime_error {
 public:
  UnresolvedLabel(SourcePos pos, const std::string& label);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct Constant {
  enum class Kind { kInt, kLong, kString, kBool, kNull };
  Kind kind = Kind::kNull;
  int64_t int_value = 0;  // kInt, kLong; 0/1 for kBool
  std::string string_value;

  static Constant Int(int64_t v) { return {Kind::kInt, v, {}}; }
  static Constant Long(int64_t v) { return {Kind::kLong, v, {}}; }
  static Constant String(std::string v) { return {Kind::kString, 0, std::move(v)}; }
  static Constant Bool(bool v) { return {Kind::kBool, v ? 1 : 0, {}}; }
  static Constant Null() { return {}; }

  bool operator==(const Constant&) const = default;
};

struct Local {
  std::string name;
  bool operator==(const Local&) const = default;
};

// `Owner.name`; `this.name` is resolved to the enclosing class while parsing.
struct FieldRef {
  std::string owner;
  std::string name;
  std::string Key() const { return owner + "." + name; }
  auto operator<=>(const FieldRef&) const = default;
};

using Operand = std::variant<Local, Constant>;

enum class RelOp { kEq, kNe, kLt, kLe, kGt, kGe };
enum class BinOp { kAdd, kSub, kMul, kConcat };

std::string_view RelOpText(RelOp op);
std::string_view BinOpText(BinOp op);
RelOp NegateRelOp(RelOp op);
RelOp SwapRelOp(RelOp op);  // a op b  <=>  b Swap(op) a

enum class InvokeKind {
  kStatic,   // call: exact target, resolved up the parent chain
  kVirtual,  // vcall: dispatched over the class hierarchy
  kNew,      // new: instantiation, signature is Class.<init>
};

struct InvokeExpr {
  InvokeKind kind = InvokeKind::kStatic;
  // Dotted `Pkg.Class.method`; for kNew the class name.
  std::string callee;
  std::vector<Operand> args;

  // The signature matched against catalogs and sensitive lists.
  std::string Signature() const;
  // Class part of the signature.
  std::string ClassName() const;
  // Method part of the signature ("<init>" for kNew).
  std::string MethodName() const;

  bool operator==(const InvokeExpr&) const = default;
};

struct BinaryExpr {
  BinOp op = BinOp::kAdd;
  Operand lhs;
  Operand rhs;
  bool operator==(const BinaryExpr&) const = default;
};

using Rhs = std::variant<Operand, FieldRef, BinaryExpr, InvokeExpr>;
using Dest = std::variant<Local, FieldRef>;

struct AssignStmt {
  Dest dest;
  Rhs rhs;
  bool operator==(const AssignStmt&) const = default;
};

struct IfGotoStmt {
  Operand lhs;
  RelOp relop = RelOp::kEq;
  Operand rhs;
  std::string target;
  uint32_t target_index = 0;  // filled in by label resolution
  bool operator==(const IfGotoStmt&) const = default;
};

struct GotoStmt {
  std::string target;
  uint32_t target_index = 0;
  bool operator==(const GotoStmt&) const = default;
};

struct ReturnStmt {
  std::optional<Operand> value;
  bool operator==(const ReturnStmt&) const = default;
};

struct InvokeStmt {
  InvokeExpr call;
  bool operator==(const InvokeStmt&) const = default;
};

using StmtNode =
    std::variant<AssignStmt, IfGotoStmt, GotoStmt, ReturnStmt, InvokeStmt>;

struct Stmt {
  std::optional<std::string> label;
  StmtNode node;
  SourcePos pos;

  // Position is not part of structural identity.
  bool operator==(const Stmt& other) const {
    return label == other.label && node == other.node;
  }

  // The invocation performed by this statement, if any (invoke statements,
  // and assignments whose right-hand side is an invoke or `new`).
  const InvokeExpr* Invocation() const;
};

struct VarDecl {
  std::string name;
  std::string type;
  bool operator==(const VarDecl&) const = default;
};

struct MethodDef {
  std::string name;
  std::vector<VarDecl> params;
  std::vector<VarDecl> locals;
  std::vector<Stmt> body;
  SourcePos pos;

  bool operator==(const MethodDef& other) const {
    return name == other.name && params == other.params &&
           locals == other.locals && body == other.body;
  }
};

struct ClassUnit {
  std::string qualified_name;
  std::string package;  // qualified_name minus its final segment
  ComponentKind kind = ComponentKind::kBasicClass;
  std::string parent;  // empty when the unit has no declared parent
  std::vector<std::string> interfaces;
  std::vector<VarDecl> fields;
  std::vector<MethodDef> methods;
  SourcePos pos;

  const MethodDef* FindMethod(std::string_view name) const;
  const VarDecl* FindField(std::string_view name) const;
  // parent followed by interfaces.
  std::vector<std::string> Supers() const;

  bool operator==(const ClassUnit& other) const {
    return qualified_name == other.qualified_name &&
           package == other.package && kind == other.kind &&
           parent == other.parent && interfaces == other.interfaces &&
           fields == other.fields && methods == other.methods;
  }
};

struct Program {
  std::vector<ClassUnit> units;
  std::string source_id;

  const ClassUnit* FindUnit(std::string_view qualified_name) const;
  bool operator==(const Program&) const = default;
};

std::string PackageOf(std::string_view qualified_name);

// Parses TBIR text. Throws ParseError, DuplicateName or UnresolvedLabel.
Program ParseProgram(std::string_view text, std::string source_id);

// Canonical TBIR text; ParseProgram(PrintProgram(p)) == p.
std::string PrintProgram(const Program& program);
std::string PrintStmt(const Stmt& stmt);
std::string PrintOperand(const Operand& operand);
std::string PrintConstant(const Constant& constant);

// ---------------------------------------------------------------------------
// Whole-program method indexing and callee resolution.

using MethodId = uint32_t;

struct StmtId {
  MethodId method = 0;
  uint32_t index = 0;
  auto operator<=>(const StmtId&) const = default;
  // Packs into one integer; used as the atom key of path predicates.
  uint64_t Key() const { return (uint64_t{method} << 32) | index; }
  static StmtId FromKey(uint64_t key) {
    return {static_cast<MethodId>(key >> 32), static_cast<uint32_t>(key)};
  }
};

// Flat, stable numbering of every method of a program: units in declaration
// order, methods in declaration order. Synthetic methods (the dummy main) are
// appended after the program's own methods. Holds pointers into the Program
// and the synthetic MethodDefs, which must outlive the table.
class MethodTable {
 public:
  explicit MethodTable(const Program& program);

  MethodId AddSynthetic(std::string signature, const MethodDef* method);

  size_t size() const { return entries_.size(); }
  const MethodDef& method(MethodId id) const { return *entries_[id].method; }
  // nullptr for synthetic methods.
  const ClassUnit* unit(MethodId id) const { return entries_[id].unit; }
  const std::string& signature(MethodId id) const {
    return entries_[id].signature;
  }
  std::optional<MethodId> Find(std::string_view signature) const;
  const Program& program() const { return *program_; }
  const Stmt& stmt(StmtId id) const { return method(id.method).body[id.index]; }
  // "Class.method#index"
  std::string StmtLabel(StmtId id) const;

 private:
  struct Entry {
    const ClassUnit* unit;
    const MethodDef* method;
    std::string signature;
  };
  const Program* program_;
  std::vector<Entry> entries_;
  std::map<std::string, MethodId, std::less<>> by_signature_;
};

// Declared class hierarchy (parent edges plus marker interfaces).
class ClassHierarchy {
 public:
  ClassHierarchy(const Program& program, const MethodTable& table);

  bool IsDeclared(std::string_view name) const;
  // `name` and every declared unit that transitively lists it as a super,
  // sorted by name.
  std::vector<std::string> SubtypesOf(std::string_view name) const;
  // Walks the parent chain from `class_name` looking for `method_name`.
  std::optional<MethodId> Lookup(std::string_view class_name,
                                 std::string_view method_name) const;

 private:
  const Program* program_;
  const MethodTable* table_;
  std::map<std::string, const ClassUnit*, std::less<>> units_;
  std::map<std::string, std::vector<std::string>, std::less<>> direct_subs_;
};

struct CalleeResolution {
  InvokeKind kind = InvokeKind::kStatic;
  std::string signature;  // verbatim dotted signature
  bool internal = false;
  // Hierarchy-compatible declared targets (CHA view); a single entry for
  // static calls, empty for instantiations and externals.
  std::vector<MethodId> candidates;
  // For kNew of a declared class.
  std::string instantiated_class;
  bool operator==(const CalleeResolution&) const = default;
};

using ResolutionTable = std::map<StmtId, CalleeResolution>;

// Maps every invoke site of every method in `table` to its resolution.
ResolutionTable ResolveCallees(const MethodTable& table,
                               const ClassHierarchy& hierarchy);
ResolutionTable ResolveCallees(const Program& program);

}  // namespace trigscan

#endif  // TRIGSCAN_IR_H_
