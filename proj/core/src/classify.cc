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

#include "trigscan/classify.h"

#include <algorithm>

namespace trigscan {

std::string_view TriggerKindName(TriggerKind kind) {
  switch (kind) {
    case TriggerKind::kTime:
      return "Time";
    case TriggerKind::kLocation:
      return "Location";
    case TriggerKind::kSms:
      return "SMS";
  }
  return "Time";
}

std::optional<TriggerKind> ParseTriggerKind(std::string_view name) {
  for (auto kind : {TriggerKind::kTime, TriggerKind::kLocation,
                    TriggerKind::kSms}) {
    if (TriggerKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

std::optional<TriggerKind> KindOfFamily(TagFamily family) {
  switch (family) {
    case TagFamily::kTime:
      return TriggerKind::kTime;
    case TagFamily::kLocation:
      return TriggerKind::kLocation;
    case TagFamily::kSms:
      return TriggerKind::kSms;
    case TagFamily::kNone:
      break;
  }
  return std::nullopt;
}

// Operations whose result measures the tagged value rather than deciding a
// match; comparisons over them are value comparisons.
bool IsMeasurement(std::string_view op) {
  return op.empty() || op == "length" || op == "size" || op == "indexOf" ||
         op == "distanceTo" || op == "distanceBetween";
}

bool HoldsOnInts(int64_t a, RelOp op, int64_t b) {
  switch (op) {
    case RelOp::kEq:
      return a == b;
    case RelOp::kNe:
      return a != b;
    case RelOp::kLt:
      return a < b;
    case RelOp::kLe:
      return a <= b;
    case RelOp::kGt:
      return a > b;
    case RelOp::kGe:
      return a >= b;
  }
  return false;
}

bool IsTruthConstant(const SymValue& v) {
  return v.kind == SymValue::Kind::kBool ||
         (v.kind == SymValue::Kind::kInt && (v.int_value == 0 || v.int_value == 1));
}

}  // namespace

std::optional<TriggerKind> TriggerKindOfDescriptor(std::string_view descriptor) {
  return KindOfFamily(FamilyOfTag(descriptor));
}

std::optional<SuspiciousCheck> ClassifyCondition(const AtomicCondition& cond) {
  const bool lhs_env = cond.lhs.family() != TagFamily::kNone;
  const bool rhs_env = cond.rhs.family() != TagFamily::kNone;
  if (lhs_env == rhs_env) return std::nullopt;
  const SymValue& tagged = lhs_env ? cond.lhs : cond.rhs;
  const SymValue& other = lhs_env ? cond.rhs : cond.lhs;
  // Orient as `tagged relop other`.
  const RelOp relop = lhs_env ? cond.relop : SwapRelOp(cond.relop);
  if (other.is_tagged()) return std::nullopt;

  SuspiciousCheck check;
  check.id = cond.id;
  check.kind = *KindOfFamily(tagged.family());
  check.tagged = tagged;

  // Matching one environment value against another is not hardcoded.
  if (std::any_of(tagged.operands.begin(), tagged.operands.end(),
                  [](const SymValue& v) { return v.is_tagged(); })) {
    return std::nullopt;
  }
  if (!IsMeasurement(tagged.op) && IsTruthConstant(other)) {
    // The tagged side is the boolean result of a modeled match; the
    // hardcoded values are its operands.
    check.compared = tagged.operands;
    check.descriptor = Render(tagged);
    check.satisfied_on_taken = HoldsOnInts(1, relop, other.int_value);
  } else {
    if (!IsMeasurement(tagged.op)) return std::nullopt;
    check.compared = {other};
    check.descriptor = Render(tagged) + " cmp " + Render(other);
    check.negated = relop == RelOp::kNe;
    check.satisfied_on_taken = !check.negated;
  }
  check.symbolic = std::none_of(check.compared.begin(), check.compared.end(),
                                [](const SymValue& v) { return v.is_concrete(); });
  return check;
}

std::vector<SuspiciousCheck> Classify(
    const std::map<StmtId, AtomicCondition>& conditions) {
  std::vector<SuspiciousCheck> out;
  for (const auto& [id, cond] : conditions) {
    if (auto check = ClassifyCondition(cond)) out.push_back(std::move(*check));
  }
  return out;
}

PostFilterResult PostFilter(const std::vector<SuspiciousCheck>& checks) {
  PostFilterResult result;
  for (const auto& check : checks) {
    std::string reason;
    for (const auto& v : check.compared) {
      if (v.kind == SymValue::Kind::kNull) {
        reason = "null check";
      } else if (v.kind == SymValue::Kind::kInt && v.int_value == -1) {
        reason = "comparison with -1";
      } else if (v.kind == SymValue::Kind::kInt && v.int_value == 0 &&
                 (check.tagged.op == "length" || check.tagged.op == "size")) {
        reason = "zero comparison of a length";
      }
      if (!reason.empty()) break;
    }
    if (reason.empty()) {
      result.kept.push_back(check);
    } else {
      result.removed.push_back({check, reason});
    }
  }
  return result;
}

}  // namespace trigscan
