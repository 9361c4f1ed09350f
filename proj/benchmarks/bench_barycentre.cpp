// Copyright 2026 The fsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "fsc/barycentre.hpp"

namespace {

void BM_Dba(benchmark::State& state) {
  std::mt19937 gen(6);
  std::normal_distribution<float> n;
  std::uniform_int_distribution<std::size_t> len(40, 80);
  std::vector<fsc::FeatureSequence> templates;
  for (int i = 0; i < state.range(0); ++i) {
    const std::size_t t = len(gen);
    std::vector<float> v(t * 13);
    for (auto& x : v) x = n(gen);
    templates.emplace_back(t, 13, std::move(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fsc::dba(templates));
}
BENCHMARK(BM_Dba)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Edb(benchmark::State& state) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<std::uint32_t> code(0, 99);
  std::uniform_int_distribution<std::size_t> len(15, 30);
  std::vector<fsc::CodeSequence> templates;
  for (int i = 0; i < 15; ++i) {
    std::vector<std::uint32_t> c(len(gen));
    for (auto& x : c) x = code(gen);
    templates.emplace_back(std::move(c), 100);
  }
  const auto alphabet = state.range(0) == 0 ? fsc::EdbAlphabet::observed_codes : fsc::EdbAlphabet::full_codebook;
  for (auto _ : state) benchmark::DoNotOptimize(fsc::edb(templates, {.alphabet = alphabet, .max_iters = 1000}));
  state.SetLabel(state.range(0) == 0 ? "observed alphabet" : "full alphabet");
}
BENCHMARK(BM_Edb)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
