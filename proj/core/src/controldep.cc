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

#include "trigscan/controldep.h"

#include <algorithm>
#include <deque>
#include <set>

namespace trigscan {

std::string AtomName(const MethodTable& table, uint64_t atom) {
  StmtId id = StmtId::FromKey(atom);
  if (id.method >= table.size()) return "c" + std::to_string(atom);
  return table.StmtLabel(id);
}

GuardedRegion GuardedInstructions(MethodId method, uint64_t atom,
                                  bool satisfied_on_taken,
                                  const MethodPredicates& predicates) {
  GuardedRegion region;
  for (uint32_t i = 0; i < predicates.stmts.size(); ++i) {
    const StmtPredicate& p = predicates.stmts[i];
    if (p.status != StmtPredicate::Status::kOk) continue;
    if (p.minimized.ContainsLiteral(atom, satisfied_on_taken)) {
      region.positive.push_back({method, i});
    }
    if (p.minimized.ContainsLiteral(atom, !satisfied_on_taken)) {
      region.negative.push_back({method, i});
    }
  }
  return region;
}

namespace {

bool Holds(int64_t a, RelOp op, int64_t b) {
  switch (op) {
    case RelOp::kEq:
      return a == b;
    case RelOp::kNe:
      return a != b;
    case RelOp::kLt:
      return a < b;
    case RelOp::kLe:
      return a <= b;
    case RelOp::kGt:
      return a > b;
    case RelOp::kGe:
      return a >= b;
  }
  return false;
}

bool IsSwitchValue(const SymValue& v) {
  return v.kind == SymValue::Kind::kBool ||
         (v.kind == SymValue::Kind::kInt && (v.int_value == 0 || v.int_value == 1));
}

std::string SimpleName(const std::string& field_key) {
  auto dot = field_key.rfind('.');
  return dot == std::string::npos ? field_key : field_key.substr(dot + 1);
}

class Detector {
 public:
  Detector(const ControlDepInput& in, const SensitiveList& sensitive,
           const ControlDepOptions& options)
      : in_(in),
        table_(in.whole->table()),
        sensitive_(sensitive),
        options_(options) {
    ComputeStartingComponents();
  }

  std::vector<LogicBombFinding> ForCheck(const SuspiciousCheck& check) {
    std::vector<LogicBombFinding> out;
    const MethodId m = check.id.method;
    auto preds_it = in_.predicates->find(m);
    if (preds_it == in_.predicates->end()) return out;
    const MethodPredicates& preds = preds_it->second;
    GuardedRegion region =
        GuardedInstructions(m, check.atom(), check.satisfied_on_taken, preds);

    auto hits = Search(region.positive);
    if (!hits.empty()) {
      LogicBombFinding f = Base(check, preds);
      f.guarded_stmts = region.positive;
      f.negative_stmts = region.negative;
      Finish(f, std::move(hits));
      out.push_back(std::move(f));
    }

    if (options_.switch_depth <= 0) return out;
    std::set<std::string> seen_fields;
    for (const auto& [field, first_region] : SwitchRegions(region.positive)) {
      if (!seen_fields.insert(field).second) continue;
      std::vector<StmtId> all = first_region.stmts;
      std::vector<StmtId> checks = first_region.checks;
      std::vector<StmtId> frontier = first_region.stmts;
      for (int level = 1; level < options_.switch_depth; ++level) {
        std::vector<StmtId> next;
        for (const auto& [inner_field, inner] : SwitchRegions(frontier)) {
          if (!seen_fields.insert(inner_field).second) continue;
          next.insert(next.end(), inner.stmts.begin(), inner.stmts.end());
          checks.insert(checks.end(), inner.checks.begin(), inner.checks.end());
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      auto switch_hits = Search(all);
      if (switch_hits.empty()) continue;
      LogicBombFinding f = Base(check, preds);
      f.guarded_stmts = all;
      f.negative_stmts = region.negative;
      f.via_switch = SimpleName(field);
      std::sort(checks.begin(), checks.end());
      f.switch_checks = std::move(checks);
      Finish(f, std::move(switch_hits));
      out.push_back(std::move(f));
    }
    return out;
  }

 private:
  struct SwitchRegion {
    std::vector<StmtId> stmts;
    std::vector<StmtId> checks;
  };

  // Fields written with a boolean constant inside `region`, each mapped to
  // the statements guarded by conditions on that field taking the written
  // value.
  std::map<std::string, SwitchRegion> SwitchRegions(
      const std::vector<StmtId>& region) {
    std::map<std::string, SymValue> writes;
    for (StmtId s : region) {
      auto it = in_.symex->field_writes.find(s);
      if (it == in_.symex->field_writes.end()) continue;
      if (IsSwitchValue(it->second.value)) {
        writes.emplace(it->second.field, it->second.value);
      }
    }
    std::map<std::string, SwitchRegion> out;
    for (const auto& [field, value] : writes) {
      SwitchRegion& target = out[field];
      for (const auto& [id, cond] : in_.symex->conditions) {
        const bool on_lhs = cond.lhs_field == field;
        const bool on_rhs = cond.rhs_field == field;
        if (on_lhs == on_rhs) continue;
        const SymValue& other = on_lhs ? cond.rhs : cond.lhs;
        if (!IsSwitchValue(other)) continue;
        const bool taken =
            on_lhs ? Holds(value.int_value, cond.relop, other.int_value)
                   : Holds(other.int_value, cond.relop, value.int_value);
        auto preds = in_.predicates->find(id.method);
        if (preds == in_.predicates->end()) continue;
        GuardedRegion r =
            GuardedInstructions(id.method, id.Key(), taken, preds->second);
        target.stmts.insert(target.stmts.end(), r.positive.begin(),
                            r.positive.end());
        target.checks.push_back(id);
      }
    }
    return out;
  }

  // Breadth-first search from the region through internal call edges;
  // returns the first witness stack of every sensitive signature reached.
  std::vector<SensitiveCall> Search(const std::vector<StmtId>& region) {
    struct FrameNode {
      CallFrame frame;
      int parent;
    };
    struct Pending {
      MethodId method;
      int depth;
      int frame;
    };
    std::vector<FrameNode> frames;
    std::deque<Pending> queue;
    std::set<MethodId> visited;
    std::vector<SensitiveCall> hits;
    std::set<std::string> hit_signatures;

    auto stack_of = [&](int index) {
      std::vector<CallFrame> stack;
      for (int i = index; i >= 0; i = frames[i].parent) {
        stack.push_back(frames[i].frame);
      }
      std::reverse(stack.begin(), stack.end());
      return stack;
    };
    auto examine = [&](StmtId site, int parent, int depth) {
      const InvokeExpr* call = table_.stmt(site).Invocation();
      if (call == nullptr) return;
      const std::string sig = call->Signature();
      if (sensitive_.Matches(sig, options_.allow_prefix) &&
          hit_signatures.insert(sig).second) {
        frames.push_back({{site, table_.StmtLabel(site), sig}, parent});
        hits.push_back({sig, stack_of(static_cast<int>(frames.size()) - 1)});
      }
      if (depth >= options_.max_depth) return;
      for (MethodId t : in_.calls->Targets(site)) {
        if (!visited.insert(t).second) continue;
        frames.push_back({{site, table_.StmtLabel(site), table_.signature(t)},
                          parent});
        queue.push_back({t, depth + 1, static_cast<int>(frames.size()) - 1});
      }
    };

    for (StmtId s : region) examine(s, -1, 0);
    while (!queue.empty()) {
      Pending p = queue.front();
      queue.pop_front();
      for (uint32_t node : in_.icfg->cfg(p.method).nodes()) {
        examine({p.method, node}, p.frame, p.depth);
      }
    }
    return hits;
  }

  LogicBombFinding Base(const SuspiciousCheck& check,
                        const MethodPredicates& preds) {
    LogicBombFinding f;
    const MethodId m = check.id.method;
    f.check = check;
    f.method = table_.signature(m);
    if (const ClassUnit* unit = table_.unit(m)) {
      f.unit = unit->qualified_name;
      f.package = unit->package;
      f.component = unit->kind;
    }
    auto start = starting_.find(m);
    f.starting_component =
        start == starting_.end() ? f.component : start->second;
    const StmtPredicate& at_check = preds.stmts[check.id.index];
    f.check_formula = at_check.minimized;
    for (const auto& other : *in_.checks) {
      if (other.id != check.id && f.check_formula.ContainsAtom(other.atom())) {
        f.nested = true;
      }
    }
    f.partial = preds.truncated || at_check.partially_minimized;
    return f;
  }

  void Finish(LogicBombFinding& f, std::vector<SensitiveCall> hits) {
    f.sensitive_calls = std::move(hits);
    const StmtId witness = f.sensitive_calls.front().stack.front().site;
    auto preds = in_.predicates->find(witness.method);
    if (preds != in_.predicates->end()) {
      const StmtPredicate& p = preds->second.stmts[witness.index];
      f.formula = p.minimized;
      f.partial = f.partial || p.partially_minimized;
    }
    f.formula_text = f.formula.ToString(
        [this](uint64_t atom) { return AtomName(table_, atom); });
    f.formula_size = static_cast<int>(f.formula.Size());
    f.guarded_count = static_cast<int>(f.guarded_stmts.size());
  }

  // The component whose lifecycle first reaches each method.
  void ComputeStartingComponents() {
    const WholeProgram& whole = *in_.whole;
    for (const auto& binding : whole.entry().lifecycle_bindings) {
      const ClassUnit* unit = whole.program().FindUnit(binding.unit);
      for (const auto& name : binding.methods) {
        auto root = table_.Find(binding.unit + "." + name);
        if (!root) continue;
        std::deque<MethodId> work{*root};
        std::set<MethodId> seen{*root};
        while (!work.empty()) {
          MethodId m = work.front();
          work.pop_front();
          starting_.emplace(m, unit->kind);
          const auto& body = table_.method(m).body;
          for (uint32_t i = 0; i < body.size(); ++i) {
            for (MethodId t : in_.calls->Targets({m, i})) {
              if (seen.insert(t).second) work.push_back(t);
            }
          }
        }
      }
    }
  }

  const ControlDepInput& in_;
  const MethodTable& table_;
  const SensitiveList& sensitive_;
  const ControlDepOptions& options_;
  std::map<MethodId, ComponentKind> starting_;
};

}  // namespace

ControlDepResult DetectLogicBombs(const ControlDepInput& input,
                                  const SensitiveList& sensitive,
                                  const ControlDepOptions& options,
                                  const Deadline& deadline) {
  ControlDepResult result;
  Detector detector(input, sensitive, options);
  std::vector<SuspiciousCheck> ordered = *input.checks;
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& check : ordered) {
    if (deadline.Expired()) {
      result.truncated = true;
      break;
    }
    for (auto& f : detector.ForCheck(check)) {
      result.findings.push_back(std::move(f));
    }
  }
  return result;
}

}  // namespace trigscan
