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

#include "trigscan/sym_value.h"

namespace trigscan {

TagFamily FamilyOfTag(std::string_view tag) {
  if (tag.rfind("#now", 0) == 0) return TagFamily::kTime;
  if (tag.rfind("#here", 0) == 0) return TagFamily::kLocation;
  if (tag.rfind("#sms", 0) == 0) return TagFamily::kSms;
  return TagFamily::kNone;
}

std::string_view TagFamilyName(TagFamily family) {
  switch (family) {
    case TagFamily::kTime:
      return "Time";
    case TagFamily::kLocation:
      return "Location";
    case TagFamily::kSms:
      return "SMS";
    case TagFamily::kNone:
      break;
  }
  return "None";
}

SymValue SymValue::Opaque(uint64_t id) {
  SymValue v;
  v.kind = Kind::kOpaque;
  v.opaque_id = id;
  return v;
}

SymValue SymValue::Int(int64_t value, bool is_long) {
  SymValue v;
  v.kind = Kind::kInt;
  v.int_value = value;
  v.is_long = is_long;
  return v;
}

SymValue SymValue::String(std::string s) {
  SymValue v;
  v.kind = Kind::kString;
  v.text = std::move(s);
  return v;
}

SymValue SymValue::Bool(bool b) {
  SymValue v;
  v.kind = Kind::kBool;
  v.int_value = b ? 1 : 0;
  return v;
}

SymValue SymValue::Null() {
  SymValue v;
  v.kind = Kind::kNull;
  return v;
}

SymValue SymValue::ConstObject(std::string type, std::vector<SymValue> args) {
  SymValue v;
  v.kind = Kind::kConstObject;
  v.text = std::move(type);
  v.operands = std::move(args);
  return v;
}

SymValue SymValue::Tagged(std::string tag, std::string op,
                          std::vector<SymValue> operands) {
  SymValue v;
  v.kind = Kind::kTagged;
  v.text = std::move(tag);
  v.op = std::move(op);
  v.operands = std::move(operands);
  return v;
}

SymValue SymValue::FromConstant(const Constant& c) {
  switch (c.kind) {
    case Constant::Kind::kInt:
      return Int(c.int_value, false);
    case Constant::Kind::kLong:
      return Int(c.int_value, true);
    case Constant::Kind::kString:
      return String(c.string_value);
    case Constant::Kind::kBool:
      return Bool(c.int_value != 0);
    case Constant::Kind::kNull:
      break;
  }
  return Null();
}

std::string QuoteString(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

std::string RenderList(const std::vector<SymValue>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += Render(values[i]);
  }
  return out;
}

}  // namespace

std::string Render(const SymValue& v) {
  switch (v.kind) {
    case SymValue::Kind::kOpaque:
      return "$" + std::to_string(v.opaque_id);
    case SymValue::Kind::kInt:
      return std::to_string(v.int_value) + (v.is_long ? "L" : "");
    case SymValue::Kind::kString:
      return QuoteString(v.text);
    case SymValue::Kind::kBool:
      return v.int_value ? "true" : "false";
    case SymValue::Kind::kNull:
      return "null";
    case SymValue::Kind::kConstObject:
      return v.text + "(" + RenderList(v.operands) + ")";
    case SymValue::Kind::kTagged:
      if (v.op.empty()) return v.text;
      return v.text + "." + v.op + "(" + RenderList(v.operands) + ")";
  }
  return "?";
}

}  // namespace trigscan
