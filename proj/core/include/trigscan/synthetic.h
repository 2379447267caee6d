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

// Seeded generator of labeled TBIR programs for ablation experiments.

#ifndef TRIGSCAN_SYNTHETIC_H_
#define TRIGSCAN_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigscan/batch.h"

namespace trigscan {

// Where and how a program's trigger is planted.
enum class SyntheticTrait {
  kPlain,          // no trigger, at most post-filtered checks
  kInApp,          // concrete trigger in the app package
  kSwitch,         // concrete trigger that arms a field switch
  kOutOfPackage,   // concrete trigger in a non-library foreign package
  kLibrary,        // concrete trigger in a known library package
  kSymbolic,       // trigger compared against an unknown value
};

std::string_view SyntheticTraitName(SyntheticTrait trait);

struct SyntheticProgram {
  std::string name;  // used as source id
  std::string text;
  Label label = Label::kBenign;
  SyntheticTrait trait = SyntheticTrait::kPlain;
  // Descriptors expected without filters; unset for symbolic triggers,
  // whose descriptor names an analysis-assigned value.
  std::optional<std::vector<std::string>> expected;
};

struct SyntheticOptions {
  size_t programs = 40;  // half benign, half malicious
  uint64_t seed = 1;
};

std::vector<SyntheticProgram> GenerateSyntheticCorpus(
    const SyntheticOptions& options);

// In-memory manifest over the generated programs.
CorpusManifest SyntheticManifest(const std::vector<SyntheticProgram>& programs);

}  // namespace trigscan

#endif  // TRIGSCAN_SYNTHETIC_H_
