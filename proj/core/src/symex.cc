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

#include "trigscan/symex.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "embedded.h"

namespace trigscan {

// ---------------------------------------------------------------------------
// Catalog

ModelCatalog ModelCatalog::Parse(std::string_view text) {
  ModelCatalog catalog;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto arrow = body.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": expected 'SIGNATURE -> ACTION'");
    }
    std::string signature = trim(body.substr(0, arrow));
    std::string action = trim(body.substr(arrow + 2));
    CatalogAction parsed;
    auto colon = action.find(':');
    std::string verb = action.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : action.substr(colon + 1);
    if (verb == "tag" && !arg.empty()) {
      parsed.kind = CatalogAction::Kind::kTag;
    } else if (verb == "strop" && !arg.empty()) {
      parsed.kind = CatalogAction::Kind::kStrOp;
    } else if (verb == "cmp" && !arg.empty()) {
      parsed.kind = CatalogAction::Kind::kCmp;
    } else if (verb == "derive" && arg.empty()) {
      parsed.kind = CatalogAction::Kind::kDerive;
    } else {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": unknown action '" + action + "'");
    }
    parsed.arg = arg;
    if (signature.empty() ||
        !catalog.actions_.emplace(signature, parsed).second) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": duplicate or empty signature '" +
                                  signature + "'");
    }
  }
  return catalog;
}

const ModelCatalog& ModelCatalog::Default() {
  static const ModelCatalog kDefault = Parse(embedded::k_catalog_default);
  return kDefault;
}

const CatalogAction* ModelCatalog::Find(std::string_view signature) const {
  auto it = actions_.find(signature);
  return it == actions_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Concrete string operations

namespace {

std::optional<std::string> ToText(const SymValue& v) {
  switch (v.kind) {
    case SymValue::Kind::kString:
      return v.text;
    case SymValue::Kind::kInt:
      return std::to_string(v.int_value);
    case SymValue::Kind::kBool:
      return std::string(v.int_value ? "true" : "false");
    case SymValue::Kind::kNull:
      return std::string("null");
    default:
      return std::nullopt;
  }
}

std::string AsciiLower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string AsciiUpper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool IsStr(const std::vector<SymValue>& args, size_t i) {
  return i < args.size() && args[i].kind == SymValue::Kind::kString;
}

bool IsInt(const std::vector<SymValue>& args, size_t i) {
  return i < args.size() && args[i].kind == SymValue::Kind::kInt;
}

std::optional<SymValue> Format(const std::vector<SymValue>& args) {
  if (!IsStr(args, 0)) return std::nullopt;
  const std::string& tmpl = args[0].text;
  std::string out;
  size_t next = 1;
  for (size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '%') {
      out.push_back(tmpl[i]);
      continue;
    }
    if (i + 1 >= tmpl.size()) return std::nullopt;
    char spec = tmpl[++i];
    if (spec == '%') {
      out.push_back('%');
    } else if (spec == 'n') {
      out.push_back('\n');
    } else if (spec == 's') {
      if (next >= args.size()) return std::nullopt;
      auto text = ToText(args[next++]);
      if (!text) return std::nullopt;
      out += *text;
    } else if (spec == 'd') {
      if (!IsInt(args, next)) return std::nullopt;
      out += std::to_string(args[next++].int_value);
    } else {
      return std::nullopt;
    }
  }
  return SymValue::String(std::move(out));
}

}  // namespace

bool IsStringPredicateOp(std::string_view op) {
  static const std::set<std::string, std::less<>> kOps = {
      "startsWith", "endsWith", "contains", "equals",  "equalsIgnoreCase",
      "matches",    "length",   "isEmpty",  "indexOf"};
  return kOps.count(op) != 0;
}

std::optional<SymValue> EvalStringOp(std::string_view op,
                                     const std::vector<SymValue>& args) {
  if (op == "builder") {
    if (args.empty() || IsInt(args, 0)) return SymValue::String("");
    auto text = ToText(args[0]);
    if (!text) return std::nullopt;
    return SymValue::String(*text);
  }
  if (op == "valueOf" || op == "toString") {
    if (args.size() != 1) return std::nullopt;
    auto text = ToText(args[0]);
    if (!text) return std::nullopt;
    return SymValue::String(*text);
  }
  if (op == "format") return Format(args);
  if (!IsStr(args, 0)) return std::nullopt;
  const std::string& s = args[0].text;
  if (op == "append" || op == "concat") {
    if (args.size() != 2) return std::nullopt;
    auto text = ToText(args[1]);
    if (!text) return std::nullopt;
    return SymValue::String(s + *text);
  }
  if (op == "length" && args.size() == 1) {
    return SymValue::Int(static_cast<int64_t>(s.size()));
  }
  if (op == "isEmpty" && args.size() == 1) return SymValue::Bool(s.empty());
  if (op == "toLowerCase" && args.size() == 1) {
    return SymValue::String(AsciiLower(s));
  }
  if (op == "toUpperCase" && args.size() == 1) {
    return SymValue::String(AsciiUpper(s));
  }
  if (op == "trim" && args.size() == 1) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && static_cast<unsigned char>(s[b]) <= ' ') ++b;
    while (e > b && static_cast<unsigned char>(s[e - 1]) <= ' ') --e;
    return SymValue::String(s.substr(b, e - b));
  }
  if (op == "substring") {
    if (!IsInt(args, 1) || args.size() > 3) return std::nullopt;
    const auto len = static_cast<int64_t>(s.size());
    int64_t begin = args[1].int_value;
    int64_t end = len;
    if (args.size() == 3) {
      if (!IsInt(args, 2)) return std::nullopt;
      end = args[2].int_value;
    }
    if (begin < 0 || end > len || begin > end) return std::nullopt;
    return SymValue::String(s.substr(begin, end - begin));
  }
  if (op == "equals" && args.size() == 2) {
    return SymValue::Bool(IsStr(args, 1) && args[1].text == s);
  }
  if (op == "equalsIgnoreCase" && args.size() == 2) {
    return SymValue::Bool(IsStr(args, 1) &&
                          AsciiLower(args[1].text) == AsciiLower(s));
  }
  if (args.size() != 2 || !IsStr(args, 1)) return std::nullopt;
  const std::string& t = args[1].text;
  if (op == "startsWith") return SymValue::Bool(s.rfind(t, 0) == 0);
  if (op == "endsWith") {
    return SymValue::Bool(s.size() >= t.size() &&
                          s.compare(s.size() - t.size(), t.size(), t) == 0);
  }
  if (op == "contains") return SymValue::Bool(s.find(t) != std::string::npos);
  if (op == "indexOf") {
    auto pos = s.find(t);
    return SymValue::Int(pos == std::string::npos ? -1
                                                  : static_cast<int64_t>(pos));
  }
  if (op == "matches") {
    try {
      return SymValue::Bool(std::regex_match(s, std::regex(t)));
    } catch (const std::regex_error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

struct Cell {
  enum class State { kBottom, kValue, kTop };
  State state = State::kBottom;
  SymValue value;

  bool Merge(const SymValue& v) {
    switch (state) {
      case State::kTop:
        return false;
      case State::kBottom:
        state = State::kValue;
        value = v;
        return true;
      case State::kValue:
        if (value == v) return false;
        state = State::kTop;
        return true;
    }
    return false;
  }
};

struct Entry {
  SymValue value;
  std::string field;
  bool operator==(const Entry&) const = default;
};

using Env = std::map<std::string, Entry>;

class Engine {
 public:
  Engine(const WholeProgram& whole, const CallGraph& calls, const Icfg& icfg,
         const ModelCatalog& catalog, const Deadline& deadline)
      : whole_(whole),
        calls_(calls),
        icfg_(icfg),
        catalog_(catalog),
        deadline_(deadline) {}

  SymexResult Run() {
    bool expired = false;
    while (!expired) {
      changed_ = false;
      for (MethodId m : icfg_.methods()) {
        if (!AnalyzeMethod(m, false)) {
          expired = true;
          break;
        }
      }
      if (!changed_) break;
    }
    if (!expired) {
      for (MethodId m : icfg_.methods()) {
        if (!AnalyzeMethod(m, true)) {
          expired = true;
          break;
        }
      }
    }
    result_.truncated = expired;
    for (const auto& [key, cell] : fields_) {
      result_.fields[key] = cell.state == Cell::State::kValue
                                ? cell.value
                                : Opaque("F:" + key);
    }
    return std::move(result_);
  }

 private:
  SymValue Opaque(const std::string& key) {
    auto [it, inserted] = ids_.emplace(key, ids_.size() + 1);
    return SymValue::Opaque(it->second);
  }

  static std::string Key(const char* kind, MethodId m, uint32_t i) {
    return std::string(kind) + ":" + std::to_string(m) + ":" +
           std::to_string(i);
  }

  void Note(bool changed) { changed_ = changed_ || changed; }

  Env InitialEnv(MethodId m) {
    Env env;
    const auto& params = whole_.table().method(m).params;
    for (uint32_t p = 0; p < params.size(); ++p) {
      const Cell& cell = params_[{m, p}];
      env[params[p].name] = {cell.state == Cell::State::kValue
                                 ? cell.value
                                 : Opaque(Key("P", m, p)),
                             ""};
    }
    return env;
  }

  // Joins `incoming` into `slot`; true when the stored state changed.
  bool Join(std::optional<Env>& slot, const Env& incoming, MethodId m,
            uint32_t node) {
    if (!slot) {
      slot = incoming;
      return true;
    }
    bool changed = false;
    for (const auto& [name, entry] : incoming) {
      auto it = slot->find(name);
      if (it == slot->end()) {
        slot->emplace(name, entry);
        changed = true;
        continue;
      }
      if (it->second == entry) continue;
      Entry joined;
      joined.value = it->second.value == entry.value
                         ? entry.value
                         : Opaque(Key("J", m, node) + ":" + name);
      joined.field = it->second.field == entry.field ? entry.field : "";
      if (!(joined == it->second)) {
        it->second = std::move(joined);
        changed = true;
      }
    }
    return changed;
  }

  // False when the deadline expired.
  bool AnalyzeMethod(MethodId m, bool record) {
    const Cfg& cfg = icfg_.cfg(m);
    if (cfg.empty()) return true;
    std::vector<std::optional<Env>> in(cfg.num_stmts());
    in[0] = InitialEnv(m);
    std::set<uint32_t> work{0};
    while (!work.empty()) {
      if (deadline_.Expired()) return false;
      uint32_t node = *work.begin();
      work.erase(work.begin());
      Env env = *in[node];
      Transfer(m, node, env, false);
      for (uint32_t succ : cfg.Successors(node)) {
        if (Join(in[succ], env, m, succ)) work.insert(succ);
      }
    }
    if (record) {
      for (uint32_t node : cfg.nodes()) {
        if (!in[node]) continue;
        Env env = *in[node];
        Transfer(m, node, env, true);
      }
    }
    return true;
  }

  Entry Lookup(const Env& env, MethodId m, const std::string& name) {
    auto it = env.find(name);
    if (it != env.end()) return it->second;
    return {Opaque("U:" + std::to_string(m) + ":" + name), ""};
  }

  Entry Eval(const Env& env, MethodId m, const Operand& op) {
    if (const auto* local = std::get_if<Local>(&op)) {
      return Lookup(env, m, local->name);
    }
    return {SymValue::FromConstant(std::get<Constant>(op)), ""};
  }

  SymValue FieldValue(const std::string& key) {
    auto it = fields_.find(key);
    if (it != fields_.end() && it->second.state == Cell::State::kValue) {
      return it->second.value;
    }
    return Opaque("F:" + key);
  }

  void CollectReads(const Stmt& stmt, std::vector<const Operand*>& out) {
    auto add = [&](const Operand& op) {
      if (std::holds_alternative<Local>(op)) out.push_back(&op);
    };
    auto add_call = [&](const InvokeExpr& call) {
      for (const auto& a : call.args) add(a);
    };
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            if (const auto* op = std::get_if<Operand>(&node.rhs)) add(*op);
            if (const auto* bin = std::get_if<BinaryExpr>(&node.rhs)) {
              add(bin->lhs);
              add(bin->rhs);
            }
            if (const auto* call = std::get_if<InvokeExpr>(&node.rhs)) {
              add_call(*call);
            }
          } else if constexpr (std::is_same_v<T, IfGotoStmt>) {
            add(node.lhs);
            add(node.rhs);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (node.value) add(*node.value);
          } else if constexpr (std::is_same_v<T, InvokeStmt>) {
            add_call(node.call);
          }
        },
        stmt.node);
  }

  void Transfer(MethodId m, uint32_t i, Env& env, bool record) {
    const StmtId id{m, i};
    const Stmt& stmt = whole_.table().stmt(id);
    if (record) {
      std::vector<const Operand*> reads;
      CollectReads(stmt, reads);
      auto& out = result_.reads[id];
      for (const Operand* op : reads) {
        out.emplace_back(std::get<Local>(*op).name, Eval(env, m, *op).value);
      }
    }
    if (const auto* assign = std::get_if<AssignStmt>(&stmt.node)) {
      Entry value = EvalRhs(env, id, assign->rhs);
      if (const auto* local = std::get_if<Local>(&assign->dest)) {
        env[local->name] = std::move(value);
      } else {
        const std::string key = std::get<FieldRef>(assign->dest).Key();
        Note(fields_[key].Merge(value.value));
        if (record) result_.field_writes[id] = {key, value.value};
      }
    } else if (const auto* branch = std::get_if<IfGotoStmt>(&stmt.node)) {
      if (record && icfg_.conditions().count(id)) {
        Entry lhs = Eval(env, m, branch->lhs);
        Entry rhs = Eval(env, m, branch->rhs);
        result_.conditions[id] = {id,        lhs.value, branch->relop,
                                  rhs.value, lhs.field, rhs.field};
      }
    } else if (const auto* ret = std::get_if<ReturnStmt>(&stmt.node)) {
      if (ret->value) Note(returns_[m].Merge(Eval(env, m, *ret->value).value));
    } else if (const auto* invoke = std::get_if<InvokeStmt>(&stmt.node)) {
      EvalInvoke(env, id, invoke->call);
    }
  }

  Entry EvalRhs(const Env& env, StmtId id, const Rhs& rhs) {
    if (const auto* op = std::get_if<Operand>(&rhs)) {
      return Eval(env, id.method, *op);
    }
    if (const auto* ref = std::get_if<FieldRef>(&rhs)) {
      return {FieldValue(ref->Key()), ref->Key()};
    }
    if (const auto* bin = std::get_if<BinaryExpr>(&rhs)) {
      return {EvalBinary(*bin, Eval(env, id.method, bin->lhs).value,
                         Eval(env, id.method, bin->rhs).value, id),
              ""};
    }
    return {EvalInvoke(env, id, std::get<InvokeExpr>(rhs)), ""};
  }

  SymValue EvalBinary(const BinaryExpr& bin, const SymValue& a,
                      const SymValue& b, StmtId id) {
    using K = SymValue::Kind;
    if (a.is_tagged() || b.is_tagged()) {
      const SymValue& tagged = a.is_tagged() ? a : b;
      const SymValue& other = a.is_tagged() ? b : a;
      if (!other.is_opaque()) return SymValue::Tagged(tagged.text);
      return Opaque(Key("E", id.method, id.index));
    }
    const bool stringy = a.kind == K::kString || b.kind == K::kString;
    if (bin.op == BinOp::kConcat || (bin.op == BinOp::kAdd && stringy)) {
      auto x = ToText(a);
      auto y = ToText(b);
      if (x && y) return SymValue::String(*x + *y);
      return Opaque(Key("E", id.method, id.index));
    }
    if (a.kind == K::kInt && b.kind == K::kInt) {
      auto x = static_cast<uint64_t>(a.int_value);
      auto y = static_cast<uint64_t>(b.int_value);
      uint64_t r = bin.op == BinOp::kAdd   ? x + y
                   : bin.op == BinOp::kSub ? x - y
                                           : x * y;
      return SymValue::Int(static_cast<int64_t>(r), a.is_long || b.is_long);
    }
    return Opaque(Key("E", id.method, id.index));
  }

  SymValue EvalInvoke(const Env& env, StmtId site, const InvokeExpr& call) {
    std::vector<SymValue> args;
    args.reserve(call.args.size());
    for (const auto& a : call.args) args.push_back(Eval(env, site.method, a).value);

    const auto& targets = calls_.Targets(site);
    if (!targets.empty()) {
      std::optional<SymValue> result;
      bool conflict = false;
      for (MethodId t : targets) {
        const auto& params = whole_.table().method(t).params;
        for (uint32_t p = 0; p < std::min(params.size(), args.size()); ++p) {
          Note(params_[{t, p}].Merge(args[p]));
        }
        const Cell& ret = returns_[t];
        if (ret.state != Cell::State::kValue) {
          conflict = true;
        } else if (!result) {
          result = ret.value;
        } else if (!(*result == ret.value)) {
          conflict = true;
        }
      }
      if (result && !conflict) return *result;
      return Opaque(Key("R", site.method, site.index));
    }
    const CalleeResolution* res = whole_.resolution(site);
    if (res != nullptr && res->internal) {
      return Opaque(Key("R", site.method, site.index));
    }
    return ModelExternal(call, args, site);
  }

  SymValue ModelExternal(const InvokeExpr& call,
                         const std::vector<SymValue>& args, StmtId site) {
    const CatalogAction* action = catalog_.Find(call.Signature());
    const bool all_concrete =
        std::all_of(args.begin(), args.end(),
                    [](const SymValue& v) { return v.is_concrete(); });
    const bool const_built =
        call.kind == InvokeKind::kNew && !args.empty() && all_concrete;
    auto tagged_it = std::find_if(args.begin(), args.end(),
                                  [](const SymValue& v) { return v.is_tagged(); });
    auto others = [&]() {
      std::vector<SymValue> rest;
      for (auto it = args.begin(); it != args.end(); ++it) {
        if (it != tagged_it) rest.push_back(*it);
      }
      return rest;
    };
    SymValue unknown = Opaque(Key("R", site.method, site.index));
    if (action == nullptr) {
      return const_built ? SymValue::ConstObject(call.ClassName(), args)
                         : unknown;
    }
    switch (action->kind) {
      case CatalogAction::Kind::kTag:
        if (const_built) return SymValue::ConstObject(call.ClassName(), args);
        return SymValue::Tagged(action->arg);
      case CatalogAction::Kind::kDerive:
        return tagged_it != args.end() ? *tagged_it : unknown;
      case CatalogAction::Kind::kStrOp:
        if (all_concrete) {
          auto r = EvalStringOp(action->arg, args);
          return r ? *r : unknown;
        }
        if (tagged_it == args.end()) return unknown;
        if (IsStringPredicateOp(action->arg)) {
          return SymValue::Tagged(tagged_it->text, action->arg, others());
        }
        return SymValue::Tagged(tagged_it->text);
      case CatalogAction::Kind::kCmp:
        if (tagged_it == args.end()) return unknown;
        return SymValue::Tagged(tagged_it->text, action->arg, others());
    }
    return unknown;
  }

  const WholeProgram& whole_;
  const CallGraph& calls_;
  const Icfg& icfg_;
  const ModelCatalog& catalog_;
  const Deadline& deadline_;

  std::map<std::pair<MethodId, uint32_t>, Cell> params_;
  std::map<MethodId, Cell> returns_;
  std::map<std::string, Cell> fields_;
  std::map<std::string, uint64_t> ids_;
  bool changed_ = false;
  SymexResult result_;
};

}  // namespace

SymexResult RunSymbolicExecution(const WholeProgram& whole,
                                 const CallGraph& calls, const Icfg& icfg,
                                 const ModelCatalog& catalog,
                                 const Deadline& deadline) {
  Engine engine(whole, calls, icfg, catalog, deadline);
  return engine.Run();
}

}  // namespace trigscan
