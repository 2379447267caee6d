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

#include "trigscan/filters.h"

#include <stdexcept>

#include "trigscan/lists.h"

namespace trigscan {

std::string_view FilterKindName(FilterKind kind) {
  switch (kind) {
    case FilterKind::kSymbolic:
      return "sym";
    case FilterKind::kPackage:
      return "pkg";
    case FilterKind::kLibrary:
      return "lib";
  }
  return "sym";
}

std::optional<FilterKind> ParseFilterKind(std::string_view name) {
  for (auto kind :
       {FilterKind::kSymbolic, FilterKind::kPackage, FilterKind::kLibrary}) {
    if (FilterKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

void FilterConfig::Enable(FilterKind kind, bool on) {
  switch (kind) {
    case FilterKind::kSymbolic:
      enable_symbolic = on;
      break;
    case FilterKind::kPackage:
      enable_package = on;
      break;
    case FilterKind::kLibrary:
      enable_library = on;
      break;
  }
}

bool FilterConfig::enabled(FilterKind kind) const {
  switch (kind) {
    case FilterKind::kSymbolic:
      return enable_symbolic;
    case FilterKind::kPackage:
      return enable_package;
    case FilterKind::kLibrary:
      return enable_library;
  }
  return false;
}

FilterConfig ParseFilterFlags(std::string_view flags) {
  FilterConfig config;
  size_t start = 0;
  while (start <= flags.size()) {
    size_t comma = flags.find(',', start);
    if (comma == std::string_view::npos) comma = flags.size();
    std::string_view name = flags.substr(start, comma - start);
    if (!name.empty()) {
      auto kind = ParseFilterKind(name);
      if (!kind) {
        throw std::invalid_argument("unknown filter '" + std::string(name) +
                                    "' (expected sym, pkg, lib)");
      }
      config.Enable(*kind);
    }
    start = comma + 1;
  }
  return config;
}

std::string InferAppPackage(const Program& program) {
  for (const auto& unit : program.units) {
    if (unit.kind != ComponentKind::kBasicClass) return unit.package;
  }
  return program.units.empty() ? "" : program.units.front().package;
}

namespace {

std::optional<std::string> Rejects(FilterKind kind, const LogicBombFinding& f,
                                   const FilterConfig& config) {
  switch (kind) {
    case FilterKind::kSymbolic:
      if (f.check.symbolic) {
        return "compared value is purely symbolic";
      }
      break;
    case FilterKind::kPackage:
      if (!PackageHasPrefix(f.package, config.app_package)) {
        return "package '" + f.package + "' outside app package '" +
               config.app_package + "'";
      }
      break;
    case FilterKind::kLibrary:
      for (const auto& prefix : config.library_prefixes) {
        if (PackageHasPrefix(f.package, prefix)) {
          return "library package prefix '" + prefix + "'";
        }
      }
      break;
  }
  return std::nullopt;
}

}  // namespace

FilterResult ApplyFilters(const std::vector<LogicBombFinding>& findings,
                          const FilterConfig& config) {
  FilterResult result;
  for (const auto& f : findings) {
    bool removed = false;
    for (auto kind :
         {FilterKind::kSymbolic, FilterKind::kPackage, FilterKind::kLibrary}) {
      if (!config.enabled(kind)) continue;
      if (auto reason = Rejects(kind, f, config)) {
        result.removed.push_back({f, kind, *reason});
        removed = true;
        break;
      }
    }
    if (!removed) result.kept.push_back(f);
  }
  return result;
}

}  // namespace trigscan
