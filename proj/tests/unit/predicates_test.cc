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

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/graphs.h"
#include "trigscan/predicates.h"

namespace trigscan {
namespace {

MethodDef Method(const std::string& body) {
  Program p = ParseProgram("class a.M kind Activity {\n method onCreate() {\n" +
                               body + " }\n}\n",
                           "x");
  return p.units[0].methods[0];
}

bool AnyIf(uint32_t) { return true; }

std::vector<std::optional<Formula>> Recover(const MethodDef& m,
                                            size_t cap = 4096) {
  const Cfg cfg = BuildCfg(m);
  return RecoverPathPredicates(cfg, AnnotateEdges(cfg, 0, AnyIf), cap);
}

Formula A(uint32_t index, bool positive = true) {
  return Formula::Atom(StmtId{0, index}.Key(), positive);
}

TEST(AnnotateTest, OnlyBranchEdgesAreConstrained) {
  const MethodDef m = Method("if p == 0 goto d\n goto d\nd: return\n");
  const Cfg cfg = BuildCfg(m);
  const auto ann = AnnotateEdges(cfg, 5, AnyIf);
  ASSERT_EQ(ann.size(), cfg.edges().size());
  for (size_t e = 0; e < cfg.edges().size(); ++e) {
    const CfgEdge& edge = cfg.edges()[e];
    if (edge.from == 0) {
      EXPECT_TRUE(ann[e].constrained);
      EXPECT_EQ(ann[e].atom, (StmtId{5, 0}).Key());
      EXPECT_EQ(ann[e].positive, edge.kind == EdgeKind::kBranchTaken);
    } else {
      EXPECT_FALSE(ann[e].constrained);
    }
  }
}

TEST(AnnotateTest, NonConditionBranchesAreUnconstrained) {
  const Cfg cfg = BuildCfg(Method("if p == 0 goto d\n x = 1\nd: return\n"));
  for (const auto& a : AnnotateEdges(cfg, 0, [](uint32_t) { return false; })) {
    EXPECT_FALSE(a.constrained);
  }
}

TEST(PredicateTest, EntryIsTrue) {
  const auto f = Recover(Method(" x = 1\n return\n"));
  ASSERT_TRUE(f[0]);
  EXPECT_TRUE(f[0]->is_true());
  EXPECT_TRUE(f[1]->is_true());
}

TEST(PredicateTest, NestedConditionsConjoin) {
  const auto f = Recover(Method(
      "if p == 0 goto d\n if q == 0 goto d\n x = 1\nd: return\n"));
  EXPECT_TRUE(oracle::Equivalent(*f[2], Formula::And(A(0, false), A(1, false))));
  EXPECT_TRUE(f[3]->is_true() || oracle::Equivalent(*f[3], Formula::True()));
}

TEST(PredicateTest, JoinBeforeSecondConditionCarriesFalseDependency) {
  // The two-way join folds p | !p on construction, so the statement under q
  // is already q before minimization.
  const auto two = Recover(Method(
      "if p == 0 goto els\n x = 1\n goto join\nels: x = 2\n"
      "join: if q == 0 goto out\n x = 3\nout: return\n"));
  EXPECT_TRUE(oracle::Equivalent(
      *two[5], Formula::Or(Formula::And(A(0, false), A(4, false)),
                           Formula::And(A(0, true), A(4, false)))));
  EXPECT_EQ(*two[5], A(4, false));

  // A three-way join keeps the false dependencies in the raw predicate.
  const MethodDef m = Method(
      "if p == 0 goto els\n x = 1\n goto join\n"
      "els: if r == 0 goto r1\n x = 2\n goto join\nr1: x = 3\n"
      "join: if q == 0 goto out\n x = 4\nout: return\n");
  const auto f = Recover(m);
  EXPECT_TRUE(oracle::Equivalent(*f[8], A(7, false)));
  EXPECT_TRUE(f[8]->ContainsAtom(A(0).atom()));
  EXPECT_TRUE(f[8]->ContainsAtom(A(3).atom()));

  const Cfg cfg = BuildCfg(m);
  const MethodPredicates mp =
      RecoverMethodPredicates(cfg, AnnotateEdges(cfg, 0, AnyIf), {});
  EXPECT_EQ(mp.stmts[8].status, StmtPredicate::Status::kOk);
  EXPECT_EQ(mp.stmts[8].raw, *f[8]);
  EXPECT_EQ(mp.stmts[8].minimized, A(7, false));
}

TEST(PredicateTest, LoopBackEdgeIsIgnored) {
  const MethodDef m = Method(
      "head: if p == 0 goto out\n x = 1\n goto head\nout: return\n");
  const Cfg cfg = BuildCfg(m);
  const auto back = BackEdges(cfg);
  size_t count = 0;
  for (size_t e = 0; e < back.size(); ++e) {
    if (!back[e]) continue;
    ++count;
    EXPECT_EQ(cfg.edges()[e].from, 2u);
    EXPECT_EQ(cfg.edges()[e].to, 0u);
  }
  EXPECT_EQ(count, 1u);
  const auto f = Recover(m);
  EXPECT_TRUE(f[0]->is_true());
  EXPECT_EQ(*f[1], A(0, false));
  EXPECT_EQ(*f[3], A(0, true));
}

TEST(PredicateTest, UnreachableStatementHasNoPredicate) {
  const Cfg cfg = BuildCfg(Method(" goto d\n x = 1\nd: return\n"));
  const auto ann = AnnotateEdges(cfg, 0, AnyIf);
  EXPECT_FALSE(RecoverPathPredicates(cfg, ann)[1].has_value());
  EXPECT_EQ(RecoverMethodPredicates(cfg, ann, {}).stmts[1].status,
            StmtPredicate::Status::kUnreachable);
}

TEST(PredicateTest, FormulaCapMarksUnknown) {
  std::string body = "if a == 0 goto out\n";
  for (int i = 0; i < 14; ++i) {
    const std::string n = std::to_string(i);
    body += "if c" + n + " == 0 goto e" + n + "\n x = 1\n goto j" + n +
            "\ne" + n + ": x = 2\nj" + n + ": x = 3\n";
  }
  body += "out: return\n";
  const Cfg cfg = BuildCfg(Method(body));
  const auto ann = AnnotateEdges(cfg, 0, AnyIf);
  PredicateOptions small;
  small.formula_cap = 64;
  const MethodPredicates mp = RecoverMethodPredicates(cfg, ann, small);
  EXPECT_EQ(mp.stmts.back().status, StmtPredicate::Status::kUnknown);
  EXPECT_EQ(mp.stmts[0].status, StmtPredicate::Status::kOk);
  EXPECT_FALSE(RecoverPathPredicates(cfg, ann, 64).back().has_value());
}

TEST(PredicateTest, TrueEdgeDominatedStatementsImplyTheAtom) {
  const MethodDef m = Method(
      "if p == 0 goto t\n return\nt: if q == 0 goto u\n return\nu: x = 1\n"
      " return\n");
  const Cfg cfg = BuildCfg(m);
  const MethodPredicates mp =
      RecoverMethodPredicates(cfg, AnnotateEdges(cfg, 0, AnyIf), {});
  for (uint32_t s : {2u, 3u, 4u, 5u}) {
    const Formula& f = mp.stmts[s].minimized;
    for (const auto& row : oracle::AllAssignments({A(0).atom(), A(2).atom()})) {
      if (oracle::Eval(f, row)) EXPECT_TRUE(row.at(A(0).atom())) << s;
    }
  }
}

TEST(PredicateTest, GeneratedStructuredMethodsMatchPathEnumeration) {
  oracle::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::string text = oracle::RandomStructuredProgram(rng, 12, i % 3 == 0);
    SCOPED_TRACE(text);
    const MethodDef m = ParseProgram(text, "g").units[0].methods[0];
    const Cfg cfg = BuildCfg(m);
    const auto ann = AnnotateEdges(cfg, 0, AnyIf);
    const auto raw = RecoverPathPredicates(cfg, ann);
    const MethodPredicates mp = RecoverMethodPredicates(cfg, ann, {});
    const auto paths = oracle::EnumerateSimplePaths(m);
    std::vector<uint64_t> vars;
    for (uint32_t s = 0; s < m.body.size(); ++s) {
      if (std::holds_alternative<IfGotoStmt>(m.body[s].node)) vars.push_back(s);
    }
    const auto rows = oracle::AllAssignments(vars);
    for (uint32_t s = 0; s < m.body.size(); ++s) {
      ASSERT_EQ(raw[s].has_value(), !paths[s].empty()) << s;
      if (!raw[s]) continue;
      for (const auto& row : rows) {
        const bool want = oracle::PathsHold(paths[s], row);
        ASSERT_EQ(oracle::Eval(*raw[s], row), want) << s;
        ASSERT_EQ(oracle::Eval(mp.stmts[s].minimized, row), want) << s;
      }
    }
  }
}

}  // namespace
}  // namespace trigscan
