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

#ifndef FSC_MFCC_HPP
#define FSC_MFCC_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fsc/seqdata.hpp"
#include "fsc/wav.hpp"

namespace fsc {

struct MfccConfig {
  int sample_rate_hz = 16000;
  float pre_emphasis = 0.97F;
  float window_ms = 25.0F;
  float hop_ms = 10.0F;
  int fft_size = 512;
  int n_mels = 26;
  int n_coeffs = 13;  // includes c0
  float mel_fmin_hz = 0.0F;
  float mel_fmax_hz = 8000.0F;

  std::size_t window_samples() const;
  std::size_t hop_samples() const;
  void validate() const;
};

double hz_to_mel(double hz);  // HTK: 2595 log10(1 + f/700)
double mel_to_hz(double mel);

/// n_mels x (fft_size/2 + 1) triangular weights, rows spaced evenly on the
/// HTK mel scale between mel_fmin_hz and mel_fmax_hz.
std::vector<std::vector<double>> mel_filterbank(const MfccConfig& cfg);

/// Frame count for `num_samples` samples: 1 + floor((N - W) / H), or 0 when
/// N < W.
std::size_t mfcc_frame_count(std::size_t num_samples, const MfccConfig& cfg);

/// MFCC front end: pre-emphasis over the whole signal (y[0] = x[0]),
/// Hamming window, zero-padded magnitude FFT, mel filterbank, natural log
/// with a 1e-10 floor, orthonormal DCT-II, first n_coeffs kept.
///
/// One extractor may be shared by several threads.
class MfccExtractor {
 public:
  explicit MfccExtractor(MfccConfig cfg);
  ~MfccExtractor();
  MfccExtractor(const MfccExtractor&) = delete;
  MfccExtractor& operator=(const MfccExtractor&) = delete;

  const MfccConfig& config() const noexcept { return cfg_; }

  FeatureSequence extract(std::span<const float> samples, int sample_rate_hz) const;
  FeatureSequence extract(const Audio& audio) const;

 private:
  struct FftPlan;

  MfccConfig cfg_;
  std::vector<double> window_;
  std::vector<std::vector<double>> filterbank_;
  std::vector<std::vector<double>> dct_;  // n_coeffs x n_mels
  std::unique_ptr<FftPlan> plan_;
};

FeatureSequence extract_mfcc(const Audio& audio, const MfccConfig& cfg = {});

}  // namespace fsc

#endif  // FSC_MFCC_HPP
