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

#ifndef TRIGSCAN_FILTERS_H_
#define TRIGSCAN_FILTERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/controldep.h"
#include "trigscan/ir.h"

namespace trigscan {

enum class FilterKind { kSymbolic, kPackage, kLibrary };

std::string_view FilterKindName(FilterKind kind);  // "sym", "pkg", "lib"
std::optional<FilterKind> ParseFilterKind(std::string_view name);

struct FilterConfig {
  bool enable_symbolic = false;
  bool enable_package = false;
  bool enable_library = false;
  // Empty means: inferred from the program (package of its first component).
  std::string app_package;
  std::vector<std::string> library_prefixes;

  bool any() const { return enable_symbolic || enable_package || enable_library; }
  void Enable(FilterKind kind, bool on = true);
  bool enabled(FilterKind kind) const;
  bool operator==(const FilterConfig&) const = default;
};

// Parses "sym,pkg,lib" (any subset; empty string enables nothing). Throws
// std::invalid_argument on unknown names.
FilterConfig ParseFilterFlags(std::string_view flags);

struct RemovedFinding {
  LogicBombFinding finding;
  FilterKind filter = FilterKind::kSymbolic;
  std::string reason;
  bool operator==(const RemovedFinding&) const = default;
};

struct FilterResult {
  std::vector<LogicBombFinding> kept;
  std::vector<RemovedFinding> removed;
};

// Package of the first unit with a component kind, or of the first unit.
std::string InferAppPackage(const Program& program);

// Applies the enabled filters in the order symbolic, package, library; a
// finding removed by one filter is attributed to it and not offered to the
// later ones. `config.app_package` must be resolved (non-empty) when the
// package filter is on.
FilterResult ApplyFilters(const std::vector<LogicBombFinding>& findings,
                          const FilterConfig& config);

}  // namespace trigscan

#endif  // TRIGSCAN_FILTERS_H_
