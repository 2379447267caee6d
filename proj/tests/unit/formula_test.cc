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
#include "trigscan/formula.h"

namespace trigscan {
namespace {

const Formula p = Formula::Atom(1);
const Formula q = Formula::Atom(2);
const Formula r = Formula::Atom(3);
Formula N(const Formula& f) { return Formula::Not(f); }

TEST(FormulaTest, ConstructorsFoldConstantsAndComplements) {
  EXPECT_TRUE(Formula::And(p, Formula::False()).is_false());
  EXPECT_EQ(Formula::And(p, Formula::True()), p);
  EXPECT_TRUE(Formula::Or(p, Formula::True()).is_true());
  EXPECT_TRUE(Formula::And(p, N(p)).is_false());
  EXPECT_TRUE(Formula::Or(p, N(p)).is_true());
  EXPECT_TRUE(Formula::And(std::vector<Formula>{}).is_true());
  EXPECT_TRUE(Formula::Or(std::vector<Formula>{}).is_false());
}

TEST(FormulaTest, AndOrAreFlattenedDeduplicatedAndOrdered) {
  const Formula a = Formula::And({q, Formula::And(p, r), p});
  ASSERT_EQ(a.kind(), Formula::Kind::kAnd);
  EXPECT_EQ(a.children().size(), 3u);
  for (const auto& c : a.children()) EXPECT_EQ(c.kind(), Formula::Kind::kAtom);
  EXPECT_EQ(a, Formula::And({r, q, p}));
  EXPECT_EQ(a.Size(), 3u);
  EXPECT_EQ(a.NodeCount(), 4u);
}

TEST(FormulaTest, NotPushesToAtoms) {
  const Formula f = N(Formula::And(p, Formula::Or(q, N(r))));
  EXPECT_EQ(f, Formula::Or(N(p), Formula::And(N(q), r)));
  EXPECT_EQ(N(N(f)), f);
}

TEST(FormulaTest, ToStringUsesNamer) {
  const Formula f = Formula::And(p, N(q));
  EXPECT_EQ(f.ToString(), "c1 & !c2");
  EXPECT_EQ(f.ToString([](uint64_t k) { return k == 1 ? "p" : "q"; }), "p & !q");
  EXPECT_TRUE(f.ContainsLiteral(2, false));
  EXPECT_FALSE(f.ContainsLiteral(2, true));
  EXPECT_EQ(f.Atoms(), (std::set<uint64_t>{1, 2}));
}

TEST(FormulaTest, EvaluateAgreesWithOracle) {
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Formula f = oracle::RandomFormula(rng, 5, 4);
    const auto atoms = oracle::AtomsOf(f);
    EXPECT_EQ(atoms, f.Atoms());
    for (const auto& row : oracle::AllAssignments({atoms.begin(), atoms.end()})) {
      EXPECT_EQ(f.Evaluate([&](uint64_t k) { return row.at(k); }),
                oracle::Eval(f, row));
    }
  }
}

TEST(FormulaTest, TruthTableRowsFollowBitOrder) {
  const auto table = TruthTable(Formula::And(p, N(q)), {1, 2});
  EXPECT_EQ(table, (std::vector<bool>{false, true, false, false}));
}

TEST(MinimizeTest, RemovesFalseDependency) {
  const Formula f = Formula::Or(Formula::And(p, q), Formula::And(N(p), q));
  const MinimizeResult m = Minimize(f);
  EXPECT_EQ(m.formula, q);
  EXPECT_FALSE(m.partial);
}

TEST(MinimizeTest, TautologyAndContradiction) {
  EXPECT_TRUE(Minimize(Formula::Or(p, N(p))).formula.is_true());
  EXPECT_TRUE(
      Minimize(Formula::Or({Formula::And(p, q), Formula::And(p, N(q)), N(p)}))
          .formula.is_true());
  EXPECT_TRUE(
      Minimize(Formula::And({Formula::Or(p, q), N(p), N(q)})).formula.is_false());
}

TEST(MinimizeTest, ConsensusTermIsDropped) {
  const Formula f = Formula::Or(
      {Formula::And(p, q), Formula::And(N(p), r), Formula::And(q, r)});
  const Formula m = Minimize(f).formula;
  EXPECT_TRUE(oracle::Equivalent(m, f));
  EXPECT_EQ(m.Size(), 4u);
}

TEST(MinimizeTest, RandomFormulasStayEquivalentWithOnlyEssentialAtoms) {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Formula f = oracle::RandomFormula(rng, 6, 4);
    const MinimizeResult m = Minimize(f);
    SCOPED_TRACE(f.ToString());
    ASSERT_FALSE(m.partial);
    ASSERT_TRUE(oracle::Equivalent(f, m.formula)) << m.formula.ToString();
    for (uint64_t atom : oracle::AtomsOf(m.formula)) {
      ASSERT_TRUE(oracle::IsEssential(m.formula, atom)) << atom;
    }
  }
}

TEST(MinimizeTest, MinimizedFormulaHasNoComplementaryLiteralsInAConjunction) {
  oracle::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Formula m = Minimize(oracle::RandomFormula(rng, 5, 4)).formula;
    std::function<void(const Formula&)> check = [&](const Formula& g) {
      if (g.kind() == Formula::Kind::kAnd) {
        for (const auto& c : g.children()) {
          if (c.kind() != Formula::Kind::kAtom) continue;
          EXPECT_FALSE(g.children().end() !=
                       std::find(g.children().begin(), g.children().end(),
                                 Formula::Atom(c.atom(), !c.positive())));
        }
      }
      if (g.kind() == Formula::Kind::kAnd || g.kind() == Formula::Kind::kOr) {
        for (const auto& c : g.children()) check(c);
      }
    };
    check(m);
  }
}

TEST(MinimizeTest, AboveAtomCapIsPartialButEquivalent) {
  std::vector<Formula> terms;
  for (uint64_t k = 1; k <= 6; ++k) {
    terms.push_back(Formula::And(Formula::Atom(k), Formula::Atom(k + 1)));
    terms.push_back(Formula::And(Formula::Atom(k), Formula::Atom(k + 1, false)));
  }
  const Formula f = Formula::Or(terms);
  const MinimizeResult m = Minimize(f, 4);
  EXPECT_TRUE(m.partial);
  EXPECT_TRUE(oracle::Equivalent(f, m.formula));
  EXPECT_LE(m.formula.Size(), f.Size());
}

TEST(MinimizeTest, AlgebraicRulesAbsorbAndMerge) {
  EXPECT_EQ(SimplifyAlgebraic(Formula::Or(p, Formula::And(p, q))), p);
  EXPECT_EQ(SimplifyAlgebraic(Formula::Or(Formula::And(p, q),
                                          Formula::And(p, N(q)))),
            p);
  oracle::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Formula f = oracle::RandomFormula(rng, 6, 4);
    EXPECT_TRUE(oracle::Equivalent(f, SimplifyAlgebraic(f)));
  }
}

}  // namespace
}  // namespace trigscan
