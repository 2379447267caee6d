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

#ifndef TRIGSCAN_LISTS_H_
#define TRIGSCAN_LISTS_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trigscan {

// Splits list-file text into entries: one per line, surrounding whitespace
// trimmed, blank lines and `#` comment lines skipped.
std::vector<std::string> ParseListLines(std::string_view text);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string ReadFile(const std::string& path);

// Sensitive method signatures. Entries ending in `.*` are class-prefix
// entries, consulted only when prefix matching is enabled.
class SensitiveList {
 public:
  SensitiveList() = default;
  SensitiveList(std::string name, std::vector<std::string> entries);

  static SensitiveList Parse(std::string_view text, std::string name);
  static const SensitiveList& Full();   // "pscout-susi-full"
  static const SensitiveList& Small();  // "sinks-small", 130 entries

  const std::string& name() const { return name_; }
  const std::set<std::string, std::less<>>& entries() const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool Matches(std::string_view signature, bool allow_prefix = false) const;

  // A copy without `removed` entries, named `name`.
  SensitiveList Without(const std::set<std::string, std::less<>>& removed,
                        std::string name) const;

 private:
  std::string name_;
  std::set<std::string, std::less<>> entries_;
};

// Package prefixes of well-known libraries.
const std::vector<std::string>& DefaultLibraryPrefixes();

// True when `package` equals `prefix` or starts with `prefix` followed by a
// dot.
bool PackageHasPrefix(std::string_view package, std::string_view prefix);

}  // namespace trigscan

#endif  // TRIGSCAN_LISTS_H_
