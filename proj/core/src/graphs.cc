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

#include "trigscan/graphs.h"

#include <algorithm>
#include <deque>
#include <sstream>

namespace trigscan {

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kFallthrough:
      return "fallthrough";
    case EdgeKind::kBranchTaken:
      return "taken";
    case EdgeKind::kBranchFallthrough:
      return "not-taken";
    case EdgeKind::kGoto:
      return "goto";
    case EdgeKind::kCall:
      return "call";
    case EdgeKind::kReturn:
      return "return";
  }
  return "fallthrough";
}

std::vector<uint32_t> Cfg::Successors(uint32_t node) const {
  std::vector<uint32_t> out;
  for (uint32_t e : out_[node]) out.push_back(edges_[e].to);
  return out;
}

std::vector<uint32_t> Cfg::Predecessors(uint32_t node) const {
  std::vector<uint32_t> out;
  for (uint32_t e : in_[node]) out.push_back(edges_[e].from);
  return out;
}

Cfg BuildCfg(const MethodDef& method) {
  Cfg cfg;
  const auto n = static_cast<uint32_t>(method.body.size());
  cfg.out_.resize(n);
  cfg.in_.resize(n);
  cfg.reachable_.assign(n, false);
  auto add = [&](uint32_t from, uint32_t to, EdgeKind kind) {
    auto id = static_cast<uint32_t>(cfg.edges_.size());
    cfg.edges_.push_back({from, to, kind});
    cfg.out_[from].push_back(id);
    cfg.in_[to].push_back(id);
  };
  for (uint32_t i = 0; i < n; ++i) {
    const StmtNode& node = method.body[i].node;
    if (const auto* branch = std::get_if<IfGotoStmt>(&node)) {
      add(i, branch->target_index, EdgeKind::kBranchTaken);
      if (i + 1 < n) add(i, i + 1, EdgeKind::kBranchFallthrough);
    } else if (const auto* jump = std::get_if<GotoStmt>(&node)) {
      add(i, jump->target_index, EdgeKind::kGoto);
    } else if (std::holds_alternative<ReturnStmt>(node)) {
      // no successors
    } else if (i + 1 < n) {
      add(i, i + 1, EdgeKind::kFallthrough);
    }
  }
  if (n == 0) return cfg;
  std::vector<uint32_t> stack{0};
  cfg.reachable_[0] = true;
  while (!stack.empty()) {
    uint32_t cur = stack.back();
    stack.pop_back();
    for (uint32_t e : cfg.out_[cur]) {
      uint32_t to = cfg.edges_[e].to;
      if (!cfg.reachable_[to]) {
        cfg.reachable_[to] = true;
        stack.push_back(to);
      }
    }
  }
  for (uint32_t i = 0; i < n; ++i) {
    if (!cfg.reachable_[i]) continue;
    cfg.nodes_.push_back(i);
    if (std::holds_alternative<ReturnStmt>(method.body[i].node)) {
      cfg.exits_.push_back(i);
    }
  }
  return cfg;
}

std::string_view CallGraphAlgorithmName(CallGraphAlgorithm algorithm) {
  return algorithm == CallGraphAlgorithm::kRta ? "rta" : "cha";
}

const std::vector<MethodId>& CallGraph::Targets(StmtId site) const {
  static const std::vector<MethodId> kNone;
  auto it = edges.find(site);
  return it == edges.end() ? kNone : it->second;
}

std::set<std::pair<StmtId, MethodId>> CallGraph::EdgeSet() const {
  std::set<std::pair<StmtId, MethodId>> out;
  for (const auto& [site, targets] : edges) {
    for (MethodId t : targets) out.emplace(site, t);
  }
  return out;
}

size_t CallGraph::EdgeCount() const {
  size_t n = 0;
  for (const auto& [site, targets] : edges) n += targets.size();
  return n;
}

namespace {

// RTA keeps a virtual target when some instantiated subtype of the receiver's
// static type dispatches to it.
std::vector<MethodId> RtaTargets(const WholeProgram& whole,
                                 const InvokeExpr& call,
                                 const std::set<std::string>& instantiated) {
  std::set<MethodId> targets;
  for (const auto& sub : whole.hierarchy().SubtypesOf(call.ClassName())) {
    if (!instantiated.count(sub)) continue;
    if (auto t = whole.hierarchy().Lookup(sub, call.MethodName())) {
      targets.insert(*t);
    }
  }
  return {targets.begin(), targets.end()};
}

}  // namespace

CallGraph BuildCallGraph(const WholeProgram& whole,
                         CallGraphAlgorithm algorithm) {
  CallGraph graph;
  graph.algorithm = algorithm;
  const bool rta = algorithm == CallGraphAlgorithm::kRta;
  if (rta) {
    for (const auto& unit : whole.program().units) {
      if (unit.kind != ComponentKind::kBasicClass) {
        graph.instantiated.insert(unit.qualified_name);
      }
    }
  }
  // Iterate to a fixpoint: newly reachable code can instantiate classes,
  // which can enable further virtual targets.
  bool changed = true;
  while (changed) {
    changed = false;
    graph.edges.clear();
    graph.reachable_methods.clear();
    std::deque<MethodId> work{whole.dummy_main()};
    graph.reachable_methods.insert(whole.dummy_main());
    while (!work.empty()) {
      MethodId m = work.front();
      work.pop_front();
      const auto& body = whole.table().method(m).body;
      for (uint32_t i = 0; i < body.size(); ++i) {
        const InvokeExpr* call = body[i].Invocation();
        if (call == nullptr) continue;
        StmtId site{m, i};
        const CalleeResolution* res = whole.resolution(site);
        std::vector<MethodId> targets;
        if (res != nullptr) {
          if (call->kind == InvokeKind::kNew) {
            if (rta && res->internal &&
                graph.instantiated.insert(res->instantiated_class).second) {
              changed = true;
            }
          } else if (call->kind == InvokeKind::kVirtual && rta) {
            targets = RtaTargets(whole, *call, graph.instantiated);
          } else {
            targets = res->candidates;
          }
        }
        for (MethodId t : targets) {
          if (graph.reachable_methods.insert(t).second) work.push_back(t);
        }
        graph.edges[site] = std::move(targets);
      }
    }
  }
  return graph;
}

const std::vector<StmtId>& Icfg::Predecessors(StmtId id) const {
  static const std::vector<StmtId> kNone;
  auto it = preds_.find(id);
  return it == preds_.end() ? kNone : it->second;
}

Icfg BuildIcfg(const WholeProgram& whole, const CallGraph& calls) {
  Icfg icfg;
  const MethodTable& table = whole.table();
  icfg.cfgs_.reserve(table.size());
  for (MethodId m = 0; m < table.size(); ++m) {
    icfg.cfgs_.push_back(BuildCfg(table.method(m)));
  }
  icfg.methods_ = calls.reachable_methods;
  std::set<IcfgEdge> edges;
  for (MethodId m : icfg.methods_) {
    const Cfg& cfg = icfg.cfgs_[m];
    for (uint32_t node : cfg.nodes()) {
      StmtId id{m, node};
      icfg.instructions_.insert(id);
      const Stmt& stmt = table.stmt(id);
      if (std::holds_alternative<IfGotoStmt>(stmt.node) && !whole.IsOpaque(id)) {
        icfg.conditions_.insert(id);
      }
      for (uint32_t e : cfg.out_edges(node)) {
        const CfgEdge& edge = cfg.edges()[e];
        edges.insert({id, StmtId{m, edge.to}, edge.kind});
      }
      for (MethodId callee : calls.Targets(id)) {
        const Cfg& callee_cfg = icfg.cfgs_[callee];
        if (callee_cfg.empty()) continue;
        edges.insert({id, StmtId{callee, 0}, EdgeKind::kCall});
        for (uint32_t exit : callee_cfg.exits()) {
          for (uint32_t succ : cfg.Successors(node)) {
            edges.insert({StmtId{callee, exit}, StmtId{m, succ},
                          EdgeKind::kReturn});
          }
        }
      }
    }
  }
  icfg.edges_.assign(edges.begin(), edges.end());
  for (const auto& edge : icfg.edges_) {
    auto& preds = icfg.preds_[edge.to];
    if (preds.empty() || preds.back() != edge.from) preds.push_back(edge.from);
  }
  for (auto& [id, preds] : icfg.preds_) {
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
  }
  return icfg;
}

std::string Icfg::ToDot(const MethodTable& table) const {
  std::ostringstream out;
  out << "digraph icfg {\n  node [shape=box, fontname=monospace];\n";
  for (MethodId m : methods_) {
    out << "  subgraph \"cluster_" << m << "\" {\n    label=\""
        << table.signature(m) << "\";\n";
    for (uint32_t node : cfgs_[m].nodes()) {
      std::string text = PrintStmt(table.stmt({m, node}));
      std::string escaped;
      for (char c : text) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
      }
      out << "    \"" << m << ":" << node << "\" [label=\"" << node << ": "
          << escaped << "\"";
      if (conditions_.count({m, node})) out << ", style=bold";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : edges_) {
    out << "  \"" << e.from.method << ":" << e.from.index << "\" -> \""
        << e.to.method << ":" << e.to.index << "\" [label=\""
        << EdgeKindName(e.kind) << "\"";
    if (e.kind == EdgeKind::kCall || e.kind == EdgeKind::kReturn) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace trigscan
