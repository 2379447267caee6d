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

// Suspicious-check classification. A condition is suspicious when exactly
// one side is derived from the time, location or SMS environment and the
// value it is matched against is hardcoded. Two shapes are recognized:
//
//   truth test        r = body.startsWith("GETPOS"); if r == 1 goto L
//                     descriptor  #sms/#body.startsWith("GETPOS")
//   value comparison  d = toDays(now); if d > 15L goto L
//                     descriptor  #now cmp 15L
//
// Checks whose matched value is itself unknown (Opaque) are kept but marked
// `symbolic`; the symbolic-value filter removes their findings later.

#ifndef TRIGSCAN_CLASSIFY_H_
#define TRIGSCAN_CLASSIFY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/symex.h"

namespace trigscan {

enum class TriggerKind { kTime, kLocation, kSms };

std::string_view TriggerKindName(TriggerKind kind);  // "Time", "Location", "SMS"
std::optional<TriggerKind> ParseTriggerKind(std::string_view name);

// Trigger kind named by the tag family a descriptor starts with.
std::optional<TriggerKind> TriggerKindOfDescriptor(std::string_view descriptor);

struct SuspiciousCheck {
  StmtId id;
  TriggerKind kind = TriggerKind::kTime;
  std::string descriptor;
  SymValue tagged;                 // the environment-derived side
  std::vector<SymValue> compared;  // the values it is matched against
  bool symbolic = false;           // no compared value is concrete
  // The edge on which the narrow check holds: taken (positive atom) or
  // fall-through (negative atom).
  bool satisfied_on_taken = true;
  bool negated = false;  // value comparison written with !=

  uint64_t atom() const { return id.Key(); }
  bool operator==(const SuspiciousCheck&) const = default;
};

std::optional<SuspiciousCheck> ClassifyCondition(const AtomicCondition& cond);

std::vector<SuspiciousCheck> Classify(
    const std::map<StmtId, AtomicCondition>& conditions);

struct RemovedCheck {
  SuspiciousCheck check;
  std::string reason;
  bool operator==(const RemovedCheck&) const = default;
};

struct PostFilterResult {
  std::vector<SuspiciousCheck> kept;
  std::vector<RemovedCheck> removed;
};

// Drops null checks, comparisons with -1, and zero comparisons of
// length/size results.
PostFilterResult PostFilter(const std::vector<SuspiciousCheck>& checks);

}  // namespace trigscan

#endif  // TRIGSCAN_CLASSIFY_H_
