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

#include <stdexcept>

#include <gtest/gtest.h>

#include "trigscan/lists.h"
#include "trigscan/pipeline.h"
#include "trigscan/symex.h"

namespace trigscan {
namespace {

std::unique_ptr<PreparedProgram> PrepareText(const std::string& text) {
  return PreparedProgram::Prepare(ParseProgram(text, "x"), AnalysisConfig{});
}

std::unique_ptr<PreparedProgram> PrepareFixture(const std::string& name) {
  return PrepareText(ReadFile(std::string(TRIGSCAN_CORPUS_DIR) + "/" + name));
}

const AtomicCondition& OnlyCondition(const PreparedProgram& p) {
  EXPECT_EQ(p.symex().conditions.size(), 1u);
  return p.symex().conditions.begin()->second;
}

TEST(CatalogTest, ParsesActions) {
  ModelCatalog c = ModelCatalog::Parse(
      "# comment\n\njava.util.Date.<init> -> tag:#now\n"
      "java.lang.String.startsWith -> strop:startsWith\n"
      "java.util.Date.after -> cmp:after\n"
      "java.util.concurrent.TimeUnit.toDays -> derive\n");
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(*c.Find("java.util.Date.<init>"),
            (CatalogAction{CatalogAction::Kind::kTag, "#now"}));
  EXPECT_EQ(c.Find("java.util.concurrent.TimeUnit.toDays")->kind,
            CatalogAction::Kind::kDerive);
  EXPECT_EQ(c.Find("java.util.Date.before"), nullptr);
}

TEST(CatalogTest, RejectsMalformedLines) {
  EXPECT_THROW(ModelCatalog::Parse("java.util.Date.<init> tag:#now\n"),
               std::invalid_argument);
  EXPECT_THROW(ModelCatalog::Parse("a.b -> explode:x\n"), std::invalid_argument);
  EXPECT_THROW(ModelCatalog::Parse("a.b -> tag:\n"), std::invalid_argument);
  EXPECT_THROW(ModelCatalog::Parse("a.b -> tag:#now\na.b -> tag:#here\n"),
               std::invalid_argument);
}

TEST(CatalogTest, DefaultCoversTriggerSources) {
  const ModelCatalog& c = ModelCatalog::Default();
  EXPECT_NE(c.Find("java.lang.System.currentTimeMillis"), nullptr);
  EXPECT_NE(c.Find("android.location.LocationManager.getLastKnownLocation"),
            nullptr);
  EXPECT_NE(c.Find("android.telephony.SmsMessage.getMessageBody"), nullptr);
}

TEST(StringOpTest, EvaluatesConcretely) {
  auto s = [](const char* v) { return SymValue::String(v); };
  EXPECT_EQ(EvalStringOp("startsWith", {s("!CMD:x"), s("!CMD:")}),
            SymValue::Bool(true));
  EXPECT_EQ(EvalStringOp("endsWith", {s("abc"), s("bc")}), SymValue::Bool(true));
  EXPECT_EQ(EvalStringOp("equalsIgnoreCase", {s("AbC"), s("abc")}),
            SymValue::Bool(true));
  EXPECT_EQ(EvalStringOp("indexOf", {s("abc"), s("z")}), SymValue::Int(-1));
  EXPECT_EQ(EvalStringOp("length", {s("four")}), SymValue::Int(4));
  EXPECT_EQ(EvalStringOp("substring", {s("hello"), SymValue::Int(1),
                                       SymValue::Int(3)}),
            s("el"));
  EXPECT_EQ(EvalStringOp("matches", {s("health"), s("hea.*")}),
            SymValue::Bool(true));
  EXPECT_EQ(EvalStringOp("trim", {s("  x ")}), s("x"));
  EXPECT_EQ(EvalStringOp("append", {s("a"), SymValue::Int(7)}), s("a7"));
}

TEST(StringOpTest, RefusesInputsThatWouldThrow) {
  auto s = [](const char* v) { return SymValue::String(v); };
  EXPECT_FALSE(EvalStringOp("substring", {s("ab"), SymValue::Int(5)}));
  EXPECT_FALSE(EvalStringOp("matches", {s("a"), s("(")}));
  EXPECT_FALSE(EvalStringOp("startsWith", {SymValue::Opaque(3), s("a")}));
  EXPECT_FALSE(EvalStringOp("frobnicate", {s("a")}));
  EXPECT_TRUE(IsStringPredicateOp("startsWith"));
  EXPECT_FALSE(IsStringPredicateOp("substring"));
}

TEST(SymexTest, CmpActionProducesTaggedComparison) {
  auto p = PrepareFixture("time_bomb.tbir");
  const AtomicCondition& c = OnlyCondition(*p);
  EXPECT_EQ(Render(c.lhs), "#now.after(java.util.Date(1418515200000L))");
  EXPECT_EQ(c.rhs, SymValue::Int(0));
}

TEST(SymexTest, StringPredicateOnTaggedBody) {
  auto p = PrepareFixture("sms_bomb.tbir");
  const AtomicCondition& c = OnlyCondition(*p);
  EXPECT_EQ(Render(c.lhs), "#sms/#body.startsWith(\"!CMD:\")");
  EXPECT_EQ(c.lhs.family(), TagFamily::kSms);
}

TEST(SymexTest, DeriveKeepsTag) {
  auto p = PrepareFixture("track_me.tbir");
  const AtomicCondition& c = OnlyCondition(*p);
  EXPECT_EQ(c.lhs, SymValue::Tagged("#now"));
  EXPECT_EQ(c.rhs, SymValue::Int(15, true));
}

TEST(SymexTest, TaggedMinusConstantStaysTaggedAndMinusUnknownIsOpaque) {
  auto p = PrepareText(R"(
class a.M kind Activity {
  method onCreate(x: long) {
    local now : long
    local d : long
    local e : long
    now = call java.lang.System.currentTimeMillis()
    d = now - 1000L
    e = now - x
    if d > 5 goto a
a:  if e > 5 goto b
b:  return
  }
}
)");
  ASSERT_EQ(p->symex().conditions.size(), 2u);
  auto it = p->symex().conditions.begin();
  EXPECT_EQ(it->second.lhs, SymValue::Tagged("#now"));
  ++it;
  EXPECT_TRUE(it->second.lhs.is_opaque());
}

TEST(SymexTest, ConstantsPropagateThroughInternalCalls) {
  auto p = PrepareText(R"(
class a.M kind Activity {
  method onCreate() {
    local body : java.lang.String
    local ok : boolean
    local sms : android.telephony.SmsMessage
    local key : java.lang.String
    key = call a.M.secret()
    sms = call android.telephony.SmsMessage.createFromPdu(null)
    body = vcall android.telephony.SmsMessage.getMessageBody(sms)
    ok = vcall java.lang.String.equals(body, key)
    if ok != 0 goto d
d:  return
  }
  method secret() {
    return "open sesame"
  }
}
)");
  const AtomicCondition& c = OnlyCondition(*p);
  EXPECT_EQ(Render(c.lhs), "#sms/#body.equals(\"open sesame\")");
}

TEST(SymexTest, FieldWithSingleWriteIsConstant) {
  auto p = PrepareFixture("switch_bomb.tbir");
  ASSERT_TRUE(p->symex().fields.count("com.example.switcher.MainActivity.armed"));
  EXPECT_EQ(p->symex().fields.at("com.example.switcher.MainActivity.armed"),
            SymValue::Bool(true));
  ASSERT_EQ(p->symex().field_writes.size(), 1u);
  EXPECT_EQ(p->symex().field_writes.begin()->second.field,
            "com.example.switcher.MainActivity.armed");
  bool saw_field_side = false;
  for (const auto& [id, c] : p->symex().conditions) {
    if (c.lhs_field == "com.example.switcher.MainActivity.armed") {
      saw_field_side = true;
    }
  }
  EXPECT_TRUE(saw_field_side);
}

TEST(RenderTest, QuotesAndRendersObjects) {
  EXPECT_EQ(QuoteString("a\"b\\c"), "\"a\\\"b\\\\c\"");
  EXPECT_EQ(Render(SymValue::ConstObject(
                "java.util.Date", {SymValue::Int(1305936000000, true)})),
            "java.util.Date(1305936000000L)");
  EXPECT_EQ(Render(SymValue::Tagged("#here", "distanceTo",
                                    {SymValue::ConstObject(
                                        "android.location.Location",
                                        {SymValue::String("fixed")})})),
            "#here.distanceTo(android.location.Location(\"fixed\"))");
  EXPECT_EQ(FamilyOfTag("#now/#hour"), TagFamily::kTime);
  EXPECT_EQ(FamilyOfTag("#here/#latitude"), TagFamily::kLocation);
  EXPECT_EQ(FamilyOfTag("#sms/#sender"), TagFamily::kSms);
  EXPECT_EQ(FamilyOfTag("#weather"), TagFamily::kNone);
}

}  // namespace
}  // namespace trigscan
