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

#include <string>

#include "trigscan/ir.h"

namespace trigscan {

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string PrintFieldRef(const FieldRef& ref) { return ref.Key(); }

std::string PrintArgs(const std::vector<Operand>& args) {
  std::string out = "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += PrintOperand(args[i]);
  }
  return out + ")";
}

std::string PrintInvoke(const InvokeExpr& call) {
  switch (call.kind) {
    case InvokeKind::kNew:
      return "new " + call.callee + PrintArgs(call.args);
    case InvokeKind::kVirtual:
      return "vcall " + call.callee + PrintArgs(call.args);
    case InvokeKind::kStatic:
      break;
  }
  return "call " + call.callee + PrintArgs(call.args);
}

struct RhsPrinter {
  std::string operator()(const Operand& op) const { return PrintOperand(op); }
  std::string operator()(const FieldRef& ref) const {
    return PrintFieldRef(ref);
  }
  std::string operator()(const BinaryExpr& expr) const {
    if (expr.op == BinOp::kConcat) {
      return "concat(" + PrintOperand(expr.lhs) + ", " +
             PrintOperand(expr.rhs) + ")";
    }
    return PrintOperand(expr.lhs) + " " + std::string(BinOpText(expr.op)) +
           " " + PrintOperand(expr.rhs);
  }
  std::string operator()(const InvokeExpr& call) const {
    return PrintInvoke(call);
  }
};

struct StmtPrinter {
  std::string operator()(const AssignStmt& s) const {
    std::string dest = std::holds_alternative<Local>(s.dest)
                           ? std::get<Local>(s.dest).name
                           : PrintFieldRef(std::get<FieldRef>(s.dest));
    return dest + " = " + std::visit(RhsPrinter{}, s.rhs);
  }
  std::string operator()(const IfGotoStmt& s) const {
    return "if " + PrintOperand(s.lhs) + " " + std::string(RelOpText(s.relop)) +
           " " + PrintOperand(s.rhs) + " goto " + s.target;
  }
  std::string operator()(const GotoStmt& s) const { return "goto " + s.target; }
  std::string operator()(const ReturnStmt& s) const {
    return s.value ? "return " + PrintOperand(*s.value) : "return";
  }
  std::string operator()(const InvokeStmt& s) const {
    return PrintInvoke(s.call);
  }
};

std::string PrintDecl(const VarDecl& decl) {
  return decl.name + " : " + decl.type;
}

}  // namespace

std::string PrintConstant(const Constant& c) {
  switch (c.kind) {
    case Constant::Kind::kInt:
      return std::to_string(c.int_value);
    case Constant::Kind::kLong:
      return std::to_string(c.int_value) + "L";
    case Constant::Kind::kString:
      return Quote(c.string_value);
    case Constant::Kind::kBool:
      return c.int_value != 0 ? "true" : "false";
    case Constant::Kind::kNull:
      return "null";
  }
  return "null";
}

std::string PrintOperand(const Operand& operand) {
  if (const auto* local = std::get_if<Local>(&operand)) return local->name;
  return PrintConstant(std::get<Constant>(operand));
}

std::string PrintStmt(const Stmt& stmt) {
  std::string body = std::visit(StmtPrinter{}, stmt.node);
  return stmt.label ? *stmt.label + ": " + body : body;
}

std::string PrintProgram(const Program& program) {
  std::string out;
  for (size_t u = 0; u < program.units.size(); ++u) {
    const ClassUnit& unit = program.units[u];
    if (u > 0) out += "\n";
    out += "class " + unit.qualified_name + " kind " +
           std::string(ComponentKindName(unit.kind));
    if (!unit.parent.empty()) out += " extends " + unit.parent;
    if (!unit.interfaces.empty()) {
      out += " implements ";
      for (size_t i = 0; i < unit.interfaces.size(); ++i) {
        if (i > 0) out += ", ";
        out += unit.interfaces[i];
      }
    }
    out += " {\n";
    for (const auto& field : unit.fields) {
      out += "  field " + PrintDecl(field) + "\n";
    }
    for (const auto& method : unit.methods) {
      out += "  method " + method.name + "(";
      for (size_t i = 0; i < method.params.size(); ++i) {
        if (i > 0) out += ", ";
        out += method.params[i].name + ": " + method.params[i].type;
      }
      out += ") {\n";
      for (const auto& local : method.locals) {
        out += "    local " + PrintDecl(local) + "\n";
      }
      for (const auto& stmt : method.body) {
        out += "    " + PrintStmt(stmt) + "\n";
      }
      out += "  }\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace trigscan
