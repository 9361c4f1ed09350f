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

#include <cmath>
#include <numbers>
#include <random>

#include "fsc/kmeans.hpp"
#include "fsc/mfcc.hpp"

namespace {

void BM_Mfcc(benchmark::State& state) {
  std::vector<float> x(static_cast<std::size_t>(state.range(0)) * 16);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = 0.3F * std::sin(2.0F * std::numbers::pi_v<float> * 440.0F * n / 16000.0F);
  const fsc::MfccExtractor extractor{fsc::MfccConfig{}};
  for (auto _ : state) benchmark::DoNotOptimize(extractor.extract(x, 16000));
  state.SetLabel(std::to_string(state.range(0)) + " ms of audio");
}
BENCHMARK(BM_Mfcc)->Arg(500)->Arg(2000);

void BM_Quantize(benchmark::State& state) {
  std::mt19937 gen(4);
  std::normal_distribution<float> n;
  std::vector<float> centroids(100 * 13), frames(200 * 13);
  for (auto& v : centroids) v = n(gen);
  for (auto& v : frames) v = n(gen);
  const fsc::Codebook cb(fsc::FeatureSequence(100, 13, centroids));
  const fsc::FeatureSequence seq(200, 13, frames);
  for (auto _ : state) benchmark::DoNotOptimize(fsc::quantize(seq, cb, true));
}
BENCHMARK(BM_Quantize);

void BM_TrainCodebook(benchmark::State& state) {
  std::mt19937 gen(5);
  std::normal_distribution<float> n;
  std::vector<fsc::FeatureSequence> data;
  for (int i = 0; i < 20; ++i) {
    std::vector<float> v(100 * 13);
    for (auto& x : v) x = n(gen);
    data.emplace_back(100, 13, std::move(v));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fsc::train_codebook(data, {.k = static_cast<std::size_t>(state.range(0)), .max_iters = 20, .tolerance = 1e-6, .seed = 0}));
  }
}
BENCHMARK(BM_TrainCodebook)->Arg(16)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
