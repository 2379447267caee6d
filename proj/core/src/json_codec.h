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

#ifndef TRIGSCAN_SRC_JSON_CODEC_H_
#define TRIGSCAN_SRC_JSON_CODEC_H_

#include "json.hpp"
#include "trigscan/report.h"

namespace trigscan::json_codec {

using Json = nlohmann::json;

Json ToJson(const AnalysisReport& report);
AnalysisReport ReportFromJson(const Json& j);

Json ToJson(const Formula& f);
Formula FormulaFromJson(const Json& j);

Json ToJson(const SymValue& v);
SymValue SymValueFromJson(const Json& j);

}  // namespace trigscan::json_codec

#endif  // TRIGSCAN_SRC_JSON_CODEC_H_
