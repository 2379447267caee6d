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

#ifndef TRIGSCAN_SRC_EMBEDDED_H_
#define TRIGSCAN_SRC_EMBEDDED_H_

// Contents of data/*.txt, generated at configure time.
namespace trigscan::embedded {

extern const char k_catalog_default[];
extern const char k_sensitive_full[];
extern const char k_sensitive_small[];
extern const char k_library_prefixes[];

}  // namespace trigscan::embedded

#endif  // TRIGSCAN_SRC_EMBEDDED_H_
