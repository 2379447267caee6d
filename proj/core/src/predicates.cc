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

#include "trigscan/predicates.h"

#include <map>

namespace trigscan {

std::vector<EdgeAnnotation> AnnotateEdges(
    const Cfg& cfg, MethodId method,
    const std::function<bool(uint32_t)>& is_condition) {
  std::vector<EdgeAnnotation> out(cfg.edges().size());
  for (size_t e = 0; e < cfg.edges().size(); ++e) {
    const CfgEdge& edge = cfg.edges()[e];
    if (edge.kind != EdgeKind::kBranchTaken &&
        edge.kind != EdgeKind::kBranchFallthrough) {
      continue;
    }
    if (!is_condition(edge.from)) continue;
    out[e].constrained = true;
    out[e].atom = StmtId{method, edge.from}.Key();
    out[e].positive = edge.kind == EdgeKind::kBranchTaken;
  }
  return out;
}

std::vector<bool> BackEdges(const Cfg& cfg) {
  std::vector<bool> back(cfg.edges().size(), false);
  if (cfg.empty()) return back;
  enum class Color { kWhite, kGrey, kBlack };
  std::vector<Color> color(cfg.num_stmts(), Color::kWhite);
  // Iterative DFS: (node, next out-edge position).
  std::vector<std::pair<uint32_t, size_t>> stack{{0, 0}};
  color[0] = Color::kGrey;
  while (!stack.empty()) {
    auto& [node, pos] = stack.back();
    const auto& outs = cfg.out_edges(node);
    if (pos == outs.size()) {
      color[node] = Color::kBlack;
      stack.pop_back();
      continue;
    }
    uint32_t e = outs[pos++];
    uint32_t to = cfg.edges()[e].to;
    if (color[to] == Color::kGrey) {
      back[e] = true;
    } else if (color[to] == Color::kWhite) {
      color[to] = Color::kGrey;
      stack.emplace_back(to, 0);
    }
  }
  return back;
}

namespace {

// Reachable nodes in a topological order of the graph without back edges.
std::vector<uint32_t> TopologicalOrder(const Cfg& cfg,
                                       const std::vector<bool>& back) {
  std::vector<int> indegree(cfg.num_stmts(), 0);
  for (uint32_t node : cfg.nodes()) {
    for (uint32_t e : cfg.in_edges(node)) {
      if (!back[e] && cfg.IsReachable(cfg.edges()[e].from)) ++indegree[node];
    }
  }
  std::vector<uint32_t> order;
  std::vector<uint32_t> ready{0};
  while (!ready.empty()) {
    uint32_t node = ready.back();
    ready.pop_back();
    order.push_back(node);
    for (uint32_t e : cfg.out_edges(node)) {
      if (back[e]) continue;
      uint32_t to = cfg.edges()[e].to;
      if (--indegree[to] == 0) ready.push_back(to);
    }
  }
  return order;
}

}  // namespace

std::vector<std::optional<Formula>> RecoverPathPredicates(
    const Cfg& cfg, const std::vector<EdgeAnnotation>& annotations,
    size_t formula_cap) {
  std::vector<std::optional<Formula>> out(cfg.num_stmts());
  if (cfg.empty()) return out;
  const std::vector<bool> back = BackEdges(cfg);
  std::vector<bool> unknown(cfg.num_stmts(), false);
  for (uint32_t node : TopologicalOrder(cfg, back)) {
    if (node == cfg.entry()) {
      out[node] = Formula::True();
      continue;
    }
    std::vector<Formula> terms;
    bool is_unknown = false;
    for (uint32_t e : cfg.in_edges(node)) {
      if (back[e]) continue;
      uint32_t from = cfg.edges()[e].from;
      if (!cfg.IsReachable(from)) continue;
      if (unknown[from]) {
        is_unknown = true;
        break;
      }
      const EdgeAnnotation& a = annotations[e];
      terms.push_back(a.constrained
                          ? Formula::And(*out[from],
                                         Formula::Atom(a.atom, a.positive))
                          : *out[from]);
    }
    if (!is_unknown) {
      Formula f = Formula::Or(std::move(terms));
      if (f.NodeCount() > formula_cap) {
        is_unknown = true;
      } else {
        out[node] = std::move(f);
      }
    }
    unknown[node] = is_unknown;
  }
  return out;
}

MethodPredicates RecoverMethodPredicates(
    const Cfg& cfg, const std::vector<EdgeAnnotation>& annotations,
    const PredicateOptions& options, const Deadline& deadline) {
  MethodPredicates result;
  result.stmts.resize(cfg.num_stmts());
  auto raw = RecoverPathPredicates(cfg, annotations, options.formula_cap);
  std::map<Formula, MinimizeResult> cache;
  for (uint32_t node : cfg.nodes()) {
    StmtPredicate& p = result.stmts[node];
    if (!raw[node]) {
      p.status = StmtPredicate::Status::kUnknown;
      continue;
    }
    if (deadline.Expired()) {
      result.truncated = true;
      p.status = StmtPredicate::Status::kUnknown;
      continue;
    }
    p.status = StmtPredicate::Status::kOk;
    p.raw = *raw[node];
    auto it = cache.find(p.raw);
    if (it == cache.end()) {
      it = cache.emplace(p.raw, Minimize(p.raw, options.atom_cap)).first;
    }
    p.minimized = it->second.formula;
    p.partially_minimized = it->second.partial;
  }
  return result;
}

}  // namespace trigscan
