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

#include <filesystem>

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/ir.h"
#include "trigscan/lists.h"

namespace trigscan {
namespace {

constexpr char kSmall[] = R"(
class com.example.app.Main kind Activity extends android.app.Activity {
  field armed : boolean
  method onCreate(self: com.example.app.Main, n: int) {
    local now : long
    local d : long
    now = call java.lang.System.currentTimeMillis()
    d = now - -5L
    this.armed = true
    if d >= 1700000000000L goto fire
    return
fire: vcall com.example.app.Main.fire(self)
    return
  }
  method fire() {
    return
  }
}
)";

TEST(ParserTest, ParsesUnitsFieldsAndStatements) {
  Program p = ParseProgram(kSmall, "small");
  ASSERT_EQ(p.units.size(), 1u);
  const ClassUnit& unit = p.units[0];
  EXPECT_EQ(unit.qualified_name, "com.example.app.Main");
  EXPECT_EQ(unit.package, "com.example.app");
  EXPECT_EQ(unit.kind, ComponentKind::kActivity);
  EXPECT_EQ(unit.parent, "android.app.Activity");
  ASSERT_EQ(unit.methods.size(), 2u);
  const MethodDef& m = unit.methods[0];
  EXPECT_EQ(m.params.size(), 2u);
  EXPECT_EQ(m.locals.size(), 2u);
  ASSERT_EQ(m.body.size(), 7u);

  const auto& sub = std::get<BinaryExpr>(std::get<AssignStmt>(m.body[1].node).rhs);
  EXPECT_EQ(sub.op, BinOp::kSub);
  EXPECT_EQ(std::get<Constant>(sub.rhs), Constant::Long(-5));

  const auto& write = std::get<AssignStmt>(m.body[2].node);
  EXPECT_EQ(std::get<FieldRef>(write.dest).Key(), "com.example.app.Main.armed");

  const auto& branch = std::get<IfGotoStmt>(m.body[3].node);
  EXPECT_EQ(branch.relop, RelOp::kGe);
  EXPECT_EQ(branch.target, "fire");
  EXPECT_EQ(branch.target_index, 5u);
  EXPECT_EQ(m.body[5].Invocation()->kind, InvokeKind::kVirtual);
  EXPECT_EQ(m.body[5].Invocation()->Signature(), "com.example.app.Main.fire");
}

TEST(ParserTest, NewUsesInitSignature) {
  Program p = ParseProgram(
      "class a.B kind BasicClass {\n method m() {\n local d : java.util.Date\n"
      " d = new java.util.Date(5L)\n return\n }\n}\n",
      "x");
  const InvokeExpr* call = p.units[0].methods[0].body[0].Invocation();
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(call->Signature(), "java.util.Date.<init>");
  EXPECT_EQ(call->ClassName(), "java.util.Date");
  EXPECT_EQ(call->MethodName(), "<init>");
}

TEST(ParserTest, ReportsPositionOfUnexpectedToken) {
  try {
    ParseProgram("class a.B kind Activity {\n  method m() {\n    x = = 3\n  }\n}\n",
                 "bad");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_GT(e.pos().column, 1);
  }
}

TEST(ParserTest, RejectsUnknownComponentKind) {
  EXPECT_THROW(ParseProgram("class a.B kind Fragment {\n}\n", "x"), ParseError);
}

TEST(ParserTest, RejectsUnterminatedString) {
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n method m() {\n"
                            " x = \"abc\n return\n }\n}\n",
                            "x"),
               ParseError);
}

TEST(ParserTest, RejectsBranchAsLastStatement) {
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n method m() {\n"
                            "L: if x == 0 goto L\n }\n}\n",
                            "x"),
               ParseError);
}

TEST(ParserTest, RejectsDuplicateNames) {
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n}\n"
                            "class a.B kind Service {\n}\n",
                            "x"),
               DuplicateName);
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n method m() {\n"
                            "L: return\nL: return\n }\n}\n",
                            "x"),
               DuplicateName);
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n method m() {\n"
                            " local v : int\n local v : long\n return\n }\n}\n",
                            "x"),
               DuplicateName);
}

TEST(ParserTest, RejectsUnresolvedLabel) {
  try {
    ParseProgram("class a.B kind Activity {\n method m() {\n"
                 " goto nowhere\n return\n }\n}\n",
                 "x");
    FAIL() << "expected UnresolvedLabel";
  } catch (const UnresolvedLabel& e) {
    EXPECT_EQ(e.pos().line, 3);
  }
}

TEST(ParserTest, RejectsOutOfRangeLiteral) {
  EXPECT_THROW(ParseProgram("class a.B kind Activity {\n method m() {\n"
                            " x = 9223372036854775808L\n return\n }\n}\n",
                            "x"),
               ParseError);
  Program p = ParseProgram("class a.B kind Activity {\n method m() {\n"
                           " x = -9223372036854775808L\n return\n }\n}\n",
                           "x");
  const auto& rhs = std::get<AssignStmt>(p.units[0].methods[0].body[0].node).rhs;
  EXPECT_EQ(std::get<Constant>(std::get<Operand>(rhs)).int_value, INT64_MIN);
}

TEST(PrinterTest, RoundTripsSmallProgram) {
  Program p = ParseProgram(kSmall, "small");
  Program again = ParseProgram(PrintProgram(p), "small");
  EXPECT_EQ(p, again);
  EXPECT_EQ(PrintProgram(p), PrintProgram(again));
}

TEST(PrinterTest, RoundTripsCorpusFixtures) {
  for (const auto& entry :
       std::filesystem::directory_iterator(TRIGSCAN_CORPUS_DIR)) {
    if (entry.path().extension() != ".tbir") continue;
    SCOPED_TRACE(entry.path().string());
    Program p = ParseProgram(ReadFile(entry.path().string()), "f");
    EXPECT_EQ(ParseProgram(PrintProgram(p), "f"), p);
  }
}

TEST(PrinterTest, RoundTripPropertyOnGeneratedPrograms) {
  oracle::Rng rng(20261016);
  for (int i = 0; i < 300; ++i) {
    Program p = oracle::RandomProgram(rng);
    const std::string text = PrintProgram(p);
    SCOPED_TRACE(text);
    Program parsed = ParseProgram(text, "");
    ASSERT_EQ(parsed, p);
    ASSERT_EQ(PrintProgram(parsed), text);
  }
}

TEST(MethodTableTest, NumbersMethodsInDeclarationOrder) {
  Program p = ParseProgram(kSmall, "small");
  MethodTable table(p);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table.signature(0), "com.example.app.Main.onCreate");
  EXPECT_EQ(table.Find("com.example.app.Main.fire"), MethodId{1});
  EXPECT_FALSE(table.Find("com.example.app.Main.nope").has_value());
  EXPECT_EQ(table.StmtLabel({0, 3}), "com.example.app.Main.onCreate#3");
}

TEST(StmtIdTest, KeyRoundTrips) {
  const StmtId id{7, 42};
  EXPECT_EQ(StmtId::FromKey(id.Key()), id);
  EXPECT_LT((StmtId{1, 99}).Key(), (StmtId{2, 0}).Key());
}

TEST(ResolveTest, VirtualCallSeesOverridesInSubclasses) {
  Program p = ParseProgram(
      ReadFile(std::string(TRIGSCAN_CORPUS_DIR) + "/polymorphic.tbir"), "poly");
  MethodTable table(p);
  ClassHierarchy hierarchy(p, table);
  EXPECT_EQ(hierarchy.SubtypesOf("com.example.poly.Handler"),
            (std::vector<std::string>{"com.example.poly.Handler",
                                      "com.example.poly.LogHandler",
                                      "com.example.poly.SmsHandler"}));
  const ResolutionTable res = ResolveCallees(table, hierarchy);
  bool saw_virtual = false;
  for (const auto& [site, r] : res) {
    if (r.signature != "com.example.poly.Handler.handle") continue;
    EXPECT_EQ(r.kind, InvokeKind::kVirtual);
    saw_virtual = true;
    EXPECT_TRUE(r.internal);
    EXPECT_EQ(r.candidates.size(), 2u);
  }
  EXPECT_TRUE(saw_virtual);
}

TEST(ResolveTest, StaticCallWalksParentChain) {
  Program p = ParseProgram(
      "class a.Base kind BasicClass {\n method helper() {\n return\n }\n}\n"
      "class a.Child kind Activity extends a.Base {\n method onCreate() {\n"
      " call a.Child.helper()\n call java.lang.Thread.sleep(5)\n return\n }\n}\n",
      "x");
  MethodTable table(p);
  ClassHierarchy hierarchy(p, table);
  EXPECT_EQ(hierarchy.Lookup("a.Child", "helper"), MethodId{0});
  const ResolutionTable res = ResolveCallees(table, hierarchy);
  const CalleeResolution& internal = res.at(StmtId{1, 0});
  EXPECT_TRUE(internal.internal);
  EXPECT_EQ(internal.candidates, std::vector<MethodId>{0});
  const CalleeResolution& external = res.at(StmtId{1, 1});
  EXPECT_FALSE(external.internal);
  EXPECT_TRUE(external.candidates.empty());
}

}  // namespace
}  // namespace trigscan
