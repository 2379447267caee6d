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

#ifndef TRIGSCAN_CORRELATION_H_
#define TRIGSCAN_CORRELATION_H_

#include <stdexcept>
#include <vector>

namespace trigscan {

// Fewer than two pairs, mismatched lengths, or a zero-variance coordinate.
class DegenerateSample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pearson product-moment correlation of paired samples.
double Pearson(const std::vector<double>& x, const std::vector<double>& y);

// 1-based ranks; tied values share the average of the ranks they span.
std::vector<double> AverageRanks(const std::vector<double>& values);

// Pearson correlation of the average ranks.
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace trigscan

#endif  // TRIGSCAN_CORRELATION_H_
