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

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/ir.h"

namespace trigscan {

namespace {

enum class TokKind { kIdent, kNumber, kString, kPunct, kNewline, kEnd };

struct Token {
  TokKind kind;
  std::string text;  // identifier, punctuation, or decoded string literal
  int64_t number = 0;
  bool long_suffix = false;
  SourcePos pos;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

const std::set<std::string, std::less<>>& Keywords() {
  static const std::set<std::string, std::less<>> kKeywords = {
      "class", "kind",   "extends", "implements", "field", "method",
      "local", "if",     "goto",    "return",     "call",  "vcall",
      "new",   "concat", "true",    "false",      "null"};
  return kKeywords;
}

std::string Describe(const Token& tok) {
  switch (tok.kind) {
    case TokKind::kIdent:
      return "'" + tok.text + "'";
    case TokKind::kNumber:
      return "number " + std::to_string(tok.number);
    case TokKind::kString:
      return "string literal";
    case TokKind::kPunct:
      return "'" + tok.text + "'";
    case TokKind::kNewline:
      return "end of line";
    case TokKind::kEnd:
      return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      SourcePos at{line_, col_};
      if (c == '\n') {
        out.push_back({TokKind::kNewline, "\n", 0, false, at});
        Advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        Advance();
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
        continue;
      }
      if (IsIdentStart(c)) {
        out.push_back(LexIdent(at));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(LexNumber(at));
        continue;
      }
      if (c == '"') {
        out.push_back(LexString(at));
        continue;
      }
      static constexpr std::string_view kTwoChar[] = {"==", "!=", "<=", ">="};
      bool matched = false;
      for (auto op : kTwoChar) {
        if (text_.substr(pos_, 2) == op) {
          out.push_back({TokKind::kPunct, std::string(op), 0, false, at});
          Advance();
          Advance();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      static constexpr std::string_view kOneChar = "{}(),:=<>+-*";
      if (kOneChar.find(c) != std::string_view::npos) {
        out.push_back({TokKind::kPunct, std::string(1, c), 0, false, at});
        Advance();
        continue;
      }
      throw ParseError(at, "token", "character '" + std::string(1, c) + "'");
    }
    out.push_back({TokKind::kEnd, "", 0, false, SourcePos{line_, col_}});
    return out;
  }

 private:
  char Peek(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token LexIdent(SourcePos at) {
    std::string text;
    while (true) {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        text.push_back(text_[pos_]);
        Advance();
      }
      if (Peek(0) == '.' && IsIdentStart(Peek(1))) {
        text.push_back('.');
        Advance();
        continue;
      }
      break;
    }
    return {TokKind::kIdent, std::move(text), 0, false, at};
  }

  Token LexNumber(SourcePos at) {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || value > uint64_t{1} << 63) {
      throw ParseError(at, "integer literal in range",
                       "'" + std::string(digits) + "'");
    }
    Token tok{TokKind::kNumber, std::string(digits), 0, false, at};
    // 2^63 is only representable negated; the parser checks that.
    tok.number = static_cast<int64_t>(value);
    if (Peek(0) == 'L') {
      tok.long_suffix = true;
      Advance();
    }
    if (IsIdentChar(Peek(0))) {
      throw ParseError(SourcePos{line_, col_}, "end of number",
                       "'" + std::string(1, Peek(0)) + "'");
    }
    return tok;
  }

  Token LexString(SourcePos at) {
    Advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw ParseError(at, "closing '\"'", "end of line");
      }
      char c = text_[pos_];
      if (c == '"') {
        Advance();
        break;
      }
      if (c == '\\') {
        Advance();
        char e = Peek(0);
        switch (e) {
          case 'n':
            value.push_back('\n');
            break;
          case 't':
            value.push_back('\t');
            break;
          case '"':
            value.push_back('"');
            break;
          case '\\':
            value.push_back('\\');
            break;
          default:
            throw ParseError(SourcePos{line_, col_}, "escape sequence",
                             "'\\" + std::string(1, e) + "'");
        }
        Advance();
        continue;
      }
      value.push_back(c);
      Advance();
    }
    return {TokKind::kString, std::move(value), 0, false, at};
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string source_id)
      : toks_(std::move(tokens)), source_id_(std::move(source_id)) {}

  Program Run() {
    Program program;
    program.source_id = source_id_;
    std::map<std::string, SourcePos> unit_names;
    SkipNewlines();
    while (Cur().kind != TokKind::kEnd) {
      ClassUnit unit = ParseClass();
      if (!unit_names.emplace(unit.qualified_name, unit.pos).second) {
        throw DuplicateName(unit.pos, "class", unit.qualified_name);
      }
      program.units.push_back(std::move(unit));
      SkipNewlines();
    }
    return program;
  }

 private:
  const Token& Cur() const { return toks_[idx_]; }
  const Token& Next() const {
    return toks_[std::min(idx_ + 1, toks_.size() - 1)];
  }
  void Bump() {
    if (idx_ + 1 < toks_.size()) ++idx_;
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    throw ParseError(Cur().pos, expected, Describe(Cur()));
  }

  bool IsPunct(std::string_view p) const {
    return Cur().kind == TokKind::kPunct && Cur().text == p;
  }
  bool IsKeyword(std::string_view k) const {
    return Cur().kind == TokKind::kIdent && Cur().text == k;
  }

  void ExpectPunct(std::string_view p) {
    if (!IsPunct(p)) Fail("'" + std::string(p) + "'");
    Bump();
  }
  void ExpectKeyword(std::string_view k) {
    if (!IsKeyword(k)) Fail("'" + std::string(k) + "'");
    Bump();
  }
  void ExpectLineEnd() {
    if (Cur().kind == TokKind::kEnd) return;
    if (Cur().kind != TokKind::kNewline) Fail("end of line");
    Bump();
  }
  void SkipNewlines() {
    while (Cur().kind == TokKind::kNewline) Bump();
  }

  std::string ExpectName(const std::string& what, bool allow_dots) {
    if (Cur().kind != TokKind::kIdent || Keywords().count(Cur().text) != 0 ||
        (!allow_dots && Cur().text.find('.') != std::string::npos)) {
      Fail(what);
    }
    std::string name = Cur().text;
    Bump();
    return name;
  }

  ClassUnit ParseClass() {
    ClassUnit unit;
    unit.pos = Cur().pos;
    ExpectKeyword("class");
    unit.qualified_name = ExpectName("qualified class name", true);
    unit.package = PackageOf(unit.qualified_name);
    ExpectKeyword("kind");
    SourcePos kind_pos = Cur().pos;
    std::string kind_text = ExpectName("component kind", false);
    auto kind = ParseComponentKind(kind_text);
    if (!kind) {
      throw ParseError(kind_pos,
                       "component kind (Activity, Service, BroadcastReceiver, "
                       "ContentProvider, BasicClass)",
                       "'" + kind_text + "'");
    }
    unit.kind = *kind;
    if (IsKeyword("extends")) {
      Bump();
      unit.parent = ExpectName("parent class name", true);
    }
    if (IsKeyword("implements")) {
      Bump();
      unit.interfaces.push_back(ExpectName("interface name", true));
      while (IsPunct(",")) {
        Bump();
        unit.interfaces.push_back(ExpectName("interface name", true));
      }
    }
    ExpectPunct("{");
    ExpectLineEnd();
    current_class_ = unit.qualified_name;
    std::set<std::string> field_names;
    std::set<std::string> method_names;
    while (true) {
      SkipNewlines();
      if (IsPunct("}")) {
        Bump();
        ExpectLineEnd();
        break;
      }
      if (IsKeyword("field")) {
        SourcePos at = Cur().pos;
        Bump();
        VarDecl field;
        field.name = ExpectName("field name", false);
        ExpectPunct(":");
        field.type = ExpectName("type", true);
        ExpectLineEnd();
        if (!field_names.insert(field.name).second) {
          throw DuplicateName(at, "field", field.name);
        }
        unit.fields.push_back(std::move(field));
        continue;
      }
      if (IsKeyword("method")) {
        MethodDef method = ParseMethod();
        if (!method_names.insert(method.name).second) {
          throw DuplicateName(method.pos, "method", method.name);
        }
        unit.methods.push_back(std::move(method));
        continue;
      }
      Fail("'field', 'method' or '}'");
    }
    return unit;
  }

  MethodDef ParseMethod() {
    MethodDef method;
    method.pos = Cur().pos;
    ExpectKeyword("method");
    method.name = ExpectName("method name", false);
    std::set<std::string> var_names;
    ExpectPunct("(");
    if (!IsPunct(")")) {
      while (true) {
        SourcePos at = Cur().pos;
        VarDecl param;
        param.name = ExpectName("parameter name", false);
        ExpectPunct(":");
        param.type = ExpectName("type", true);
        if (!var_names.insert(param.name).second) {
          throw DuplicateName(at, "parameter", param.name);
        }
        method.params.push_back(std::move(param));
        if (IsPunct(",")) {
          Bump();
          continue;
        }
        break;
      }
    }
    ExpectPunct(")");
    ExpectPunct("{");
    ExpectLineEnd();
    while (true) {
      SkipNewlines();
      if (IsPunct("}")) {
        Bump();
        ExpectLineEnd();
        break;
      }
      if (Cur().kind == TokKind::kEnd) Fail("'}'");
      if (IsKeyword("local")) {
        SourcePos at = Cur().pos;
        Bump();
        VarDecl local;
        local.name = ExpectName("local name", false);
        ExpectPunct(":");
        local.type = ExpectName("type", true);
        ExpectLineEnd();
        if (!var_names.insert(local.name).second) {
          throw DuplicateName(at, "local", local.name);
        }
        method.locals.push_back(std::move(local));
        continue;
      }
      method.body.push_back(ParseStmt());
    }
    ResolveLabels(method);
    return method;
  }

  static void ResolveLabels(MethodDef& method) {
    std::map<std::string, uint32_t> labels;
    for (uint32_t i = 0; i < method.body.size(); ++i) {
      const auto& stmt = method.body[i];
      if (!stmt.label) continue;
      if (!labels.emplace(*stmt.label, i).second) {
        throw DuplicateName(stmt.pos, "label", *stmt.label);
      }
    }
    auto resolve = [&](const Stmt& stmt, const std::string& target) {
      auto it = labels.find(target);
      if (it == labels.end()) throw UnresolvedLabel(stmt.pos, target);
      return it->second;
    };
    for (uint32_t i = 0; i < method.body.size(); ++i) {
      auto& stmt = method.body[i];
      if (auto* branch = std::get_if<IfGotoStmt>(&stmt.node)) {
        branch->target_index = resolve(stmt, branch->target);
        if (i + 1 == method.body.size()) {
          throw ParseError(stmt.pos, "a statement after the conditional branch",
                           "end of method");
        }
      } else if (auto* jump = std::get_if<GotoStmt>(&stmt.node)) {
        jump->target_index = resolve(stmt, jump->target);
      }
    }
  }

  Stmt ParseStmt() {
    Stmt stmt;
    stmt.pos = Cur().pos;
    if (Cur().kind == TokKind::kIdent && Keywords().count(Cur().text) == 0 &&
        Cur().text.find('.') == std::string::npos &&
        Next().kind == TokKind::kPunct && Next().text == ":") {
      stmt.label = Cur().text;
      Bump();
      Bump();
      stmt.pos = Cur().pos;
    }
    if (IsKeyword("goto")) {
      Bump();
      GotoStmt jump;
      jump.target = ExpectName("label", false);
      stmt.node = std::move(jump);
    } else if (IsKeyword("return")) {
      Bump();
      ReturnStmt ret;
      if (Cur().kind != TokKind::kNewline && Cur().kind != TokKind::kEnd) {
        ret.value = ParseOperand();
      }
      stmt.node = std::move(ret);
    } else if (IsKeyword("if")) {
      Bump();
      IfGotoStmt branch;
      branch.lhs = ParseOperand();
      branch.relop = ParseRelOp();
      branch.rhs = ParseOperand();
      ExpectKeyword("goto");
      branch.target = ExpectName("label", false);
      stmt.node = std::move(branch);
    } else if (IsKeyword("call") || IsKeyword("vcall")) {
      stmt.node = InvokeStmt{ParseInvoke()};
    } else if (IsKeyword("new")) {
      stmt.node = InvokeStmt{ParseNew()};
    } else if (Cur().kind == TokKind::kIdent &&
               Keywords().count(Cur().text) == 0) {
      AssignStmt assign;
      std::string name = Cur().text;
      Bump();
      if (name.find('.') == std::string::npos) {
        assign.dest = Local{name};
      } else {
        assign.dest = MakeFieldRef(name);
      }
      ExpectPunct("=");
      assign.rhs = ParseRhs();
      stmt.node = std::move(assign);
    } else {
      Fail("statement");
    }
    ExpectLineEnd();
    return stmt;
  }

  FieldRef MakeFieldRef(const std::string& dotted) const {
    auto dot = dotted.rfind('.');
    FieldRef ref{dotted.substr(0, dot), dotted.substr(dot + 1)};
    if (ref.owner == "this") ref.owner = current_class_;
    return ref;
  }

  RelOp ParseRelOp() {
    static const std::map<std::string, RelOp, std::less<>> kOps = {
        {"==", RelOp::kEq}, {"!=", RelOp::kNe}, {"<", RelOp::kLt},
        {"<=", RelOp::kLe}, {">", RelOp::kGt},  {">=", RelOp::kGe}};
    if (Cur().kind == TokKind::kPunct) {
      auto it = kOps.find(Cur().text);
      if (it != kOps.end()) {
        Bump();
        return it->second;
      }
    }
    Fail("relational operator (==, !=, <, <=, >, >=)");
  }

  Rhs ParseRhs() {
    if (IsKeyword("new")) return ParseNew();
    if (IsKeyword("call") || IsKeyword("vcall")) return ParseInvoke();
    if (IsKeyword("concat")) {
      Bump();
      ExpectPunct("(");
      BinaryExpr expr;
      expr.op = BinOp::kConcat;
      expr.lhs = ParseOperand();
      ExpectPunct(",");
      expr.rhs = ParseOperand();
      ExpectPunct(")");
      return expr;
    }
    if (Cur().kind == TokKind::kIdent && Keywords().count(Cur().text) == 0 &&
        Cur().text.find('.') != std::string::npos) {
      FieldRef ref = MakeFieldRef(Cur().text);
      Bump();
      return ref;
    }
    Operand lhs = ParseOperand();
    if (Cur().kind == TokKind::kPunct &&
        (Cur().text == "+" || Cur().text == "-" || Cur().text == "*")) {
      BinaryExpr expr;
      expr.op = Cur().text == "+"   ? BinOp::kAdd
                : Cur().text == "-" ? BinOp::kSub
                                    : BinOp::kMul;
      Bump();
      expr.lhs = std::move(lhs);
      expr.rhs = ParseOperand();
      return expr;
    }
    return lhs;
  }

  InvokeExpr ParseNew() {
    Bump();
    InvokeExpr call;
    call.kind = InvokeKind::kNew;
    call.callee = ExpectName("class name", true);
    call.args = ParseArgs();
    return call;
  }

  InvokeExpr ParseInvoke() {
    InvokeExpr call;
    call.kind = IsKeyword("vcall") ? InvokeKind::kVirtual : InvokeKind::kStatic;
    Bump();
    if (Cur().kind != TokKind::kIdent ||
        Cur().text.find('.') == std::string::npos) {
      Fail("qualified method signature");
    }
    call.callee = Cur().text;
    Bump();
    call.args = ParseArgs();
    return call;
  }

  std::vector<Operand> ParseArgs() {
    std::vector<Operand> args;
    ExpectPunct("(");
    if (IsPunct(")")) {
      Bump();
      return args;
    }
    while (true) {
      args.push_back(ParseOperand());
      if (IsPunct(",")) {
        Bump();
        continue;
      }
      break;
    }
    ExpectPunct(")");
    return args;
  }

  Operand ParseOperand() {
    const Token& tok = Cur();
    if (tok.kind == TokKind::kString) {
      Constant c = Constant::String(tok.text);
      Bump();
      return c;
    }
    bool negative = false;
    if (IsPunct("-") && Next().kind == TokKind::kNumber) {
      negative = true;
      Bump();
    }
    if (Cur().kind == TokKind::kNumber) {
      const Token& num = Cur();
      uint64_t magnitude = static_cast<uint64_t>(num.number);
      if (!negative && magnitude == uint64_t{1} << 63) {
        Fail("integer literal in range");
      }
      int64_t value = negative ? static_cast<int64_t>(0 - magnitude)
                               : static_cast<int64_t>(magnitude);
      Constant c = num.long_suffix ? Constant::Long(value) : Constant::Int(value);
      Bump();
      return c;
    }
    if (negative) Fail("number");
    if (IsKeyword("true") || IsKeyword("false")) {
      Constant c = Constant::Bool(Cur().text == "true");
      Bump();
      return c;
    }
    if (IsKeyword("null")) {
      Bump();
      return Constant::Null();
    }
    if (tok.kind == TokKind::kIdent && Keywords().count(tok.text) == 0 &&
        tok.text.find('.') == std::string::npos) {
      Local local{tok.text};
      Bump();
      return local;
    }
    Fail("operand (local or constant)");
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
  std::string source_id_;
  std::string current_class_;
};

}  // namespace

Program ParseProgram(std::string_view text, std::string source_id) {
  Lexer lexer(text);
  Parser parser(lexer.Run(), std::move(source_id));
  return parser.Run();
}

}  // namespace trigscan
