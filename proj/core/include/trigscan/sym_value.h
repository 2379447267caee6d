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

#ifndef TRIGSCAN_SYM_VALUE_H_
#define TRIGSCAN_SYM_VALUE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/ir.h"

namespace trigscan {

// Tag families of environment-derived values.
enum class TagFamily { kNone, kTime, kLocation, kSms };

// "#now/#hour" -> kTime, "#here..." -> kLocation, "#sms..." -> kSms.
TagFamily FamilyOfTag(std::string_view tag);
std::string_view TagFamilyName(TagFamily family);  // "Time", ...

// A symbolic value. Tagged values carry a tag path such as "#sms/#body" and,
// when produced by a modeled comparison or string predicate, the operation
// name and its other operands:  #sms/#body.startsWith("GETPOS").
struct SymValue {
  enum class Kind {
    kOpaque,       // unknown; equal only to itself (same id)
    kInt,          // int or long constant
    kString,
    kBool,
    kNull,
    kConstObject,  // object built only from constants, e.g. Date(1305936000000L)
    kTagged,
  };

  Kind kind = Kind::kOpaque;
  int64_t int_value = 0;  // kInt; 0/1 for kBool
  bool is_long = false;   // kInt
  uint64_t opaque_id = 0;
  // kString: the value; kConstObject: the class; kTagged: the tag path.
  std::string text;
  std::string op;                 // kTagged: operation, may be empty
  std::vector<SymValue> operands;  // kConstObject args; kTagged op operands

  static SymValue Opaque(uint64_t id);
  static SymValue Int(int64_t v, bool is_long = false);
  static SymValue String(std::string s);
  static SymValue Bool(bool b);
  static SymValue Null();
  static SymValue ConstObject(std::string type, std::vector<SymValue> args);
  static SymValue Tagged(std::string tag, std::string op = {},
                         std::vector<SymValue> operands = {});
  static SymValue FromConstant(const Constant& c);

  bool is_opaque() const { return kind == Kind::kOpaque; }
  bool is_tagged() const { return kind == Kind::kTagged; }
  // Int, String, Bool, Null, or a constant-built object.
  bool is_concrete() const {
    return kind != Kind::kOpaque && kind != Kind::kTagged;
  }
  TagFamily family() const {
    return is_tagged() ? FamilyOfTag(text) : TagFamily::kNone;
  }

  bool operator==(const SymValue&) const = default;
};

// Human-readable rendering used in check descriptors.
std::string Render(const SymValue& value);
std::string QuoteString(std::string_view s);

}  // namespace trigscan

#endif  // TRIGSCAN_SYM_VALUE_H_
