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

#ifndef TRIGSCAN_GRAPHS_H_
#define TRIGSCAN_GRAPHS_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigscan/ir.h"
#include "trigscan/model.h"

namespace trigscan {

enum class EdgeKind {
  kFallthrough,        // sequential flow out of a non-branch statement
  kBranchTaken,        // IfGoto condition holds
  kBranchFallthrough,  // IfGoto condition fails
  kGoto,
  kCall,    // invoke site -> callee entry (Icfg only)
  kReturn,  // callee exit -> successor of the invoke site (Icfg only)
};

std::string_view EdgeKindName(EdgeKind kind);

struct CfgEdge {
  uint32_t from = 0;
  uint32_t to = 0;
  EdgeKind kind = EdgeKind::kFallthrough;
  bool operator==(const CfgEdge&) const = default;
};

// Intraprocedural CFG over statement indices. The entry is statement 0.
// An IfGoto whose target is its own fall-through has two parallel edges.
class Cfg {
 public:
  size_t num_stmts() const { return out_.size(); }
  bool empty() const { return out_.empty(); }
  uint32_t entry() const { return 0; }

  const std::vector<CfgEdge>& edges() const { return edges_; }
  // Indices into edges().
  const std::vector<uint32_t>& out_edges(uint32_t node) const {
    return out_[node];
  }
  const std::vector<uint32_t>& in_edges(uint32_t node) const {
    return in_[node];
  }
  std::vector<uint32_t> Successors(uint32_t node) const;
  std::vector<uint32_t> Predecessors(uint32_t node) const;

  // Statements reachable from the entry, ascending.
  const std::vector<uint32_t>& nodes() const { return nodes_; }
  bool IsReachable(uint32_t node) const { return reachable_[node]; }
  // Reachable Return statements.
  const std::vector<uint32_t>& exits() const { return exits_; }

 private:
  friend Cfg BuildCfg(const MethodDef& method);
  std::vector<CfgEdge> edges_;
  std::vector<std::vector<uint32_t>> out_;
  std::vector<std::vector<uint32_t>> in_;
  std::vector<uint32_t> nodes_;
  std::vector<bool> reachable_;
  std::vector<uint32_t> exits_;
};

Cfg BuildCfg(const MethodDef& method);

enum class CallGraphAlgorithm { kCha, kRta };

std::string_view CallGraphAlgorithmName(CallGraphAlgorithm algorithm);

struct CallGraph {
  CallGraphAlgorithm algorithm = CallGraphAlgorithm::kCha;
  // Reachable invoke site -> internal targets (sorted). Sites calling only
  // externals map to an empty list.
  std::map<StmtId, std::vector<MethodId>> edges;
  std::set<MethodId> reachable_methods;
  // Classes considered instantiated (RTA only; empty for CHA).
  std::set<std::string> instantiated;

  const std::vector<MethodId>& Targets(StmtId site) const;
  std::set<std::pair<StmtId, MethodId>> EdgeSet() const;
  size_t EdgeCount() const;
};

// Builds the call graph over methods reachable from the dummy main.
CallGraph BuildCallGraph(const WholeProgram& whole, CallGraphAlgorithm algorithm);

struct IcfgEdge {
  StmtId from;
  StmtId to;
  EdgeKind kind = EdgeKind::kFallthrough;
  auto operator<=>(const IcfgEdge&) const = default;
};

// The interprocedural CFG (I_r, E_r) with reachable conditions C_r.
class Icfg {
 public:
  const std::vector<Cfg>& cfgs() const { return cfgs_; }
  const Cfg& cfg(MethodId method) const { return cfgs_[method]; }

  const std::set<StmtId>& instructions() const { return instructions_; }
  const std::vector<IcfgEdge>& edges() const { return edges_; }
  // Reachable IfGoto statements excluding opaque branches.
  const std::set<StmtId>& conditions() const { return conditions_; }
  const std::set<MethodId>& methods() const { return methods_; }

  bool Contains(StmtId id) const { return instructions_.count(id) != 0; }
  // Γ⁻(i)
  const std::vector<StmtId>& Predecessors(StmtId id) const;

  // Graphviz rendering, stable across runs.
  std::string ToDot(const MethodTable& table) const;

 private:
  friend Icfg BuildIcfg(const WholeProgram& whole, const CallGraph& calls);
  std::vector<Cfg> cfgs_;
  std::set<StmtId> instructions_;
  std::vector<IcfgEdge> edges_;
  std::set<StmtId> conditions_;
  std::set<MethodId> methods_;
  std::map<StmtId, std::vector<StmtId>> preds_;
};

Icfg BuildIcfg(const WholeProgram& whole, const CallGraph& calls);

}  // namespace trigscan

#endif  // TRIGSCAN_GRAPHS_H_
