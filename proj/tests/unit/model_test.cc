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

#include <set>

#include <gtest/gtest.h>

#include "trigscan/model.h"

namespace trigscan {
namespace {

constexpr char kTwoComponents[] = R"(
class a.Main kind Activity {
  method onResume() {
    return
  }
  method onCreate() {
    return
  }
  method helper() {
    return
  }
}
class a.Rx kind BroadcastReceiver {
  method onReceive(c: android.content.Context, i: android.content.Intent) {
    return
  }
}
class a.Util kind BasicClass {
  method onCreate() {
    return
  }
}
)";

std::set<std::string> InvokedFromDummy(const WholeProgram& whole) {
  std::set<std::string> out;
  for (const auto& stmt : whole.entry().dummy_main.body) {
    if (const InvokeExpr* call = stmt.Invocation()) out.insert(call->Signature());
  }
  return out;
}

TEST(EntryModelTest, BindsDeclaredLifecycleMethodsInOrder) {
  EntryModel model = BuildEntryModel(ParseProgram(kTwoComponents, "x"));
  ASSERT_EQ(model.lifecycle_bindings.size(), 2u);
  EXPECT_EQ(model.lifecycle_bindings[0],
            (LifecycleBinding{"a.Main", {"onCreate", "onResume"}}));
  EXPECT_EQ(model.lifecycle_bindings[1],
            (LifecycleBinding{"a.Rx", {"onReceive"}}));
  EXPECT_TRUE(model.diagnostics.empty());
}

TEST(EntryModelTest, DummyMainCallsEveryLifecycleMethodBehindOpaqueBranches) {
  WholeProgram whole(ParseProgram(kTwoComponents, "x"));
  EXPECT_EQ(InvokedFromDummy(whole),
            (std::set<std::string>{"a.Main.onCreate", "a.Main.onResume",
                                   "a.Rx.onReceive"}));
  const MethodDef& dummy = whole.entry().dummy_main;
  ASSERT_FALSE(whole.entry().opaque_branches.empty());
  for (uint32_t index : whole.entry().opaque_branches) {
    ASSERT_LT(index, dummy.body.size());
    EXPECT_TRUE(std::holds_alternative<IfGotoStmt>(dummy.body[index].node));
    EXPECT_TRUE(whole.IsOpaque({whole.dummy_main(), index}));
  }
  EXPECT_EQ(whole.table().signature(whole.dummy_main()), kDummyMainSignature);
  EXPECT_EQ(whole.dummy_main(), whole.table().size() - 1);
}

TEST(EntryModelTest, ProgramConditionsAreNotOpaque) {
  WholeProgram whole(ParseProgram(
      "class a.M kind Activity {\n method onCreate() {\n local x : int\n"
      " if x == 0 goto d\n x = 1\nd: return\n }\n}\n",
      "x"));
  EXPECT_FALSE(whole.IsOpaque({0, 0}));
}

TEST(EntryModelTest, NoLifecycleMethodsGivesDiagnostic) {
  EntryModel model = BuildEntryModel(ParseProgram(
      "class a.U kind BasicClass {\n method run() {\n return\n }\n}\n", "x"));
  EXPECT_TRUE(model.lifecycle_bindings.empty());
  EXPECT_FALSE(model.diagnostics.empty());
  EXPECT_TRUE(model.opaque_branches.empty());
}

TEST(EntryModelTest, LifecycleTablesFollowComponentKinds) {
  EXPECT_EQ(LifecycleMethods(ComponentKind::kBroadcastReceiver),
            std::vector<std::string>{"onReceive"});
  EXPECT_TRUE(LifecycleMethods(ComponentKind::kBasicClass).empty());
  EXPECT_EQ(LifecycleMethods(ComponentKind::kActivity).front(), "onCreate");
}

}  // namespace
}  // namespace trigscan
