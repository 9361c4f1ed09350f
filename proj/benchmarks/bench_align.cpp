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

#include "fsc/align.hpp"

namespace {

fsc::FeatureSequence random_sequence(std::mt19937& gen, std::size_t frames, std::size_t dims) {
  std::normal_distribution<float> n;
  std::vector<float> v(frames * dims);
  for (auto& x : v) x = n(gen);
  return fsc::FeatureSequence(frames, dims, std::move(v));
}

void BM_Dtw(benchmark::State& state) {
  std::mt19937 gen(1);
  const auto frames = static_cast<std::size_t>(state.range(0));
  const auto a = random_sequence(gen, frames, 13);
  const auto b = random_sequence(gen, frames + frames / 5, 13);
  for (auto _ : state) benchmark::DoNotOptimize(fsc::dtw(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_DtwHighDim(benchmark::State& state) {
  std::mt19937 gen(2);
  const auto a = random_sequence(gen, 50, static_cast<std::size_t>(state.range(0)));
  const auto b = random_sequence(gen, 60, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fsc::dtw_cost(a, b));
}
BENCHMARK(BM_DtwHighDim)->Arg(13)->Arg(768);

void BM_EditDistance(benchmark::State& state) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<std::uint32_t> code(0, 99);
  std::vector<std::uint32_t> a(static_cast<std::size_t>(state.range(0))), b(a.size() + 3);
  for (auto& c : a) c = code(gen);
  for (auto& c : b) c = code(gen);
  for (auto _ : state) benchmark::DoNotOptimize(fsc::ned(a, b));
}
BENCHMARK(BM_EditDistance)->Arg(10)->Arg(50)->Arg(200);

}  // namespace
