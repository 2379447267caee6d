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

#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "trigscan/batch.h"
#include "trigscan/formula.h"
#include "trigscan/ir.h"
#include "trigscan/lists.h"
#include "trigscan/pipeline.h"
#include "trigscan/synthetic.h"

namespace trigscan {
namespace {

std::string Fixture(const std::string& name) {
  return ReadFile(std::string(TRIGSCAN_CORPUS_DIR) + "/" + name);
}

// Disjunction of `terms` random cubes over `atoms` variables.
Formula RandomDnf(std::mt19937_64& rng, int atoms, int terms) {
  std::uniform_int_distribution<int> atom(1, atoms);
  std::bernoulli_distribution sign(0.5);
  std::vector<Formula> cubes;
  for (int t = 0; t < terms; ++t) {
    std::vector<Formula> lits;
    for (int k = 0; k < 3; ++k) lits.push_back(Formula::Atom(atom(rng), sign(rng)));
    cubes.push_back(Formula::And(lits));
  }
  return Formula::Or(cubes);
}

void BM_ParseHolyColbert(benchmark::State& state) {
  const std::string text = Fixture("holy_colbert.tbir");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ParseProgram(text, "holy_colbert"));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_ParseHolyColbert);

void BM_Minimize(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Formula> inputs;
  for (int i = 0; i < 64; ++i) {
    inputs.push_back(RandomDnf(rng, static_cast<int>(state.range(0)), 8));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Minimize(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Minimize)->DenseRange(4, 12, 4);

void BM_AnalyzeFixture(benchmark::State& state, const char* name) {
  const std::string text = Fixture(name);
  const AnalysisConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeSource(text, name, config));
  }
}
BENCHMARK_CAPTURE(BM_AnalyzeFixture, sms_bomb, "sms_bomb.tbir");
BENCHMARK_CAPTURE(BM_AnalyzeFixture, holy_colbert, "holy_colbert.tbir");
BENCHMARK_CAPTURE(BM_AnalyzeFixture, card_io, "card_io.tbir");

void BM_SyntheticBatch(benchmark::State& state) {
  const CorpusManifest manifest = SyntheticManifest(
      GenerateSyntheticCorpus({static_cast<size_t>(state.range(0)), 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunBatch(manifest, AnalysisConfig{}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SyntheticBatch)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace trigscan

BENCHMARK_MAIN();
