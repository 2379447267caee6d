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

#include <gtest/gtest.h>

#include "oracles.h"
#include "trigscan/correlation.h"

namespace trigscan {
namespace {

TEST(PearsonTest, IdentityAndReversal) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  EXPECT_EQ(Pearson(x, x), 1.0);
  EXPECT_EQ(Pearson(x, {5, 4, 3, 2, 1}), -1.0);
  EXPECT_EQ(Pearson(x, {2, 4, 6, 8, 10}), 1.0);
}

TEST(PearsonTest, KnownValue) {
  EXPECT_NEAR(Pearson({1, 2, 3, 4}, {2, 1, 4, 3}), 0.6, 1e-15);
}

TEST(PearsonTest, DegenerateSamplesThrow) {
  EXPECT_THROW(Pearson({1}, {1}), DegenerateSample);
  EXPECT_THROW(Pearson({1, 2}, {1, 2, 3}), DegenerateSample);
  EXPECT_THROW(Pearson({3, 3, 3}, {1, 2, 3}), DegenerateSample);
  EXPECT_THROW(Spearman({1, 2, 3}, {7, 7, 7}), DegenerateSample);
}

TEST(RankTest, TiesShareAverageRank) {
  EXPECT_EQ(AverageRanks({10, 20, 20, 30}),
            (std::vector<double>{1, 2.5, 2.5, 4}));
  EXPECT_EQ(AverageRanks({5, 5, 5}), (std::vector<double>{2, 2, 2}));
  EXPECT_EQ(AverageRanks({3, 1, 2}), (std::vector<double>{3, 1, 2}));
}

TEST(SpearmanTest, MonotoneTransformIsOne) {
  const std::vector<double> x = {0.5, 3, 1, 8, 2};
  std::vector<double> y;
  for (double v : x) y.push_back(v * v * v + 7);
  EXPECT_EQ(Spearman(x, y), 1.0);
  std::vector<double> z;
  for (double v : x) z.push_back(-v);
  EXPECT_EQ(Spearman(x, z), -1.0);
}

TEST(SpearmanTest, NoTiesMatchesClassicFormula) {
  const std::vector<double> x = {3, 1, 4, 5, 9, 2, 6};
  const std::vector<double> y = {2, 7, 1, 8, 28, 18, 4};
  const auto rx = oracle::CountingRanks(x);
  const auto ry = oracle::CountingRanks(y);
  double d2 = 0;
  for (size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = x.size();
  EXPECT_NEAR(Spearman(x, y), 1 - 6 * d2 / (n * (n * n - 1)), 1e-14);
}

TEST(CorrelationTest, MatchesDirectSummationOnRandomSamples) {
  oracle::Rng rng(17);
  std::uniform_int_distribution<int> len(2, 60);
  std::uniform_int_distribution<int> small(0, 9);
  std::uniform_real_distribution<double> real(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const int n = len(rng);
    std::vector<double> x(n), y(n);
    for (int j = 0; j < n; ++j) {
      x[j] = i % 2 ? small(rng) : real(rng);
      y[j] = i % 3 ? real(rng) : small(rng);
    }
    x[0] = -1;
    x[1] = 11;
    y[0] = 100;
    y[1] = -100;
    EXPECT_NEAR(Pearson(x, y), oracle::DirectPearson(x, y), 1e-12);
    EXPECT_NEAR(Spearman(x, y), oracle::DirectSpearman(x, y), 1e-12);
    EXPECT_EQ(AverageRanks(x), oracle::CountingRanks(x));
  }
}

}  // namespace
}  // namespace trigscan
