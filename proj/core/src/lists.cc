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

#include "trigscan/lists.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "embedded.h"

namespace trigscan {

std::vector<std::string> ParseListLines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SensitiveList::SensitiveList(std::string name, std::vector<std::string> entries)
    : name_(std::move(name)), entries_(entries.begin(), entries.end()) {}

SensitiveList SensitiveList::Parse(std::string_view text, std::string name) {
  return SensitiveList(std::move(name), ParseListLines(text));
}

const SensitiveList& SensitiveList::Full() {
  static const SensitiveList kList =
      Parse(embedded::k_sensitive_full, "pscout-susi-full");
  return kList;
}

const SensitiveList& SensitiveList::Small() {
  static const SensitiveList kList =
      Parse(embedded::k_sensitive_small, "sinks-small");
  return kList;
}

bool SensitiveList::Matches(std::string_view signature,
                            bool allow_prefix) const {
  if (entries_.count(signature)) return true;
  if (!allow_prefix) return false;
  auto dot = signature.rfind('.');
  if (dot == std::string_view::npos) return false;
  std::string wildcard(signature.substr(0, dot));
  wildcard += ".*";
  return entries_.count(wildcard) != 0;
}

SensitiveList SensitiveList::Without(
    const std::set<std::string, std::less<>>& removed, std::string name) const {
  SensitiveList out;
  out.name_ = std::move(name);
  for (const auto& e : entries_) {
    if (!removed.count(e)) out.entries_.insert(e);
  }
  return out;
}

const std::vector<std::string>& DefaultLibraryPrefixes() {
  static const std::vector<std::string> kPrefixes =
      ParseListLines(embedded::k_library_prefixes);
  return kPrefixes;
}

bool PackageHasPrefix(std::string_view package, std::string_view prefix) {
  if (prefix.empty()) return false;
  if (package.substr(0, prefix.size()) != prefix) return false;
  return package.size() == prefix.size() || package[prefix.size()] == '.';
}

}  // namespace trigscan
