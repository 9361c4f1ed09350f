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

#include "fsc/mfcc.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "fsc/error.hpp"

namespace fsc {
namespace {

constexpr double kLogFloor = 1e-10;

// FFTW's planner is not thread-safe; execution with fresh arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n_real)
      : real(static_cast<double*>(fftw_malloc(sizeof(double) * n_real))),
        spectrum(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n_real / 2 + 1)))) {
    if (real == nullptr || spectrum == nullptr) {
      release();
      throw std::bad_alloc();
    }
  }
  ~FftwBuffer() { release(); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  void release() {
    if (real) fftw_free(real);
    if (spectrum) fftw_free(spectrum);
    real = nullptr;
    spectrum = nullptr;
  }

  double* real;
  fftw_complex* spectrum;
};

}  // namespace

struct MfccExtractor::FftPlan {
  explicit FftPlan(int n) : buffer(static_cast<std::size_t>(n)) {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, buffer.real, buffer.spectrum, FFTW_ESTIMATE);
    if (plan == nullptr) fail(Errc::invariant, "FFTW could not create a plan");
  }
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  FftwBuffer buffer;
  fftw_plan plan = nullptr;
};

std::size_t MfccConfig::window_samples() const {
  return static_cast<std::size_t>(std::lround(window_ms * sample_rate_hz / 1000.0));
}

std::size_t MfccConfig::hop_samples() const {
  return static_cast<std::size_t>(std::lround(hop_ms * sample_rate_hz / 1000.0));
}

void MfccConfig::validate() const {
  require(sample_rate_hz > 0, Errc::invalid_argument, "sample rate must be positive");
  require(window_samples() >= 1, Errc::invalid_argument, "window must span at least one sample");
  require(hop_samples() >= 1, Errc::invalid_argument, "hop must span at least one sample");
  require(fft_size >= 2 && static_cast<std::size_t>(fft_size) >= window_samples(), Errc::invalid_argument,
          "fft_size must be at least the window length in samples");
  require(n_mels >= 1 && n_coeffs >= 1 && n_coeffs <= n_mels, Errc::invalid_argument,
          "need 1 <= n_coeffs <= n_mels");
  require(mel_fmin_hz >= 0.0F && mel_fmin_hz < mel_fmax_hz && mel_fmax_hz <= sample_rate_hz / 2.0F,
          Errc::invalid_argument, "need 0 <= fmin < fmax <= sample_rate / 2");
  require(pre_emphasis >= 0.0F && pre_emphasis < 1.0F, Errc::invalid_argument, "pre_emphasis must be in [0, 1)");
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<std::vector<double>> mel_filterbank(const MfccConfig& cfg) {
  const std::size_t bins = static_cast<std::size_t>(cfg.fft_size) / 2 + 1;
  const double mel_lo = hz_to_mel(cfg.mel_fmin_hz);
  const double mel_hi = hz_to_mel(cfg.mel_fmax_hz);
  std::vector<double> edges(cfg.n_mels + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) / static_cast<double>(cfg.n_mels + 1);
  }
  std::vector<std::vector<double>> bank(cfg.n_mels, std::vector<double>(bins, 0.0));
  for (std::size_t k = 0; k < bins; ++k) {
    const double mel = hz_to_mel(static_cast<double>(k) * cfg.sample_rate_hz / cfg.fft_size);
    for (int m = 0; m < cfg.n_mels; ++m) {
      const double left = edges[m];
      const double centre = edges[m + 1];
      const double right = edges[m + 2];
      if (mel > left && mel <= centre) {
        bank[m][k] = (mel - left) / (centre - left);
      } else if (mel > centre && mel < right) {
        bank[m][k] = (right - mel) / (right - centre);
      }
    }
  }
  return bank;
}

std::size_t mfcc_frame_count(std::size_t num_samples, const MfccConfig& cfg) {
  const std::size_t window = cfg.window_samples();
  if (num_samples < window) return 0;
  return 1 + (num_samples - window) / cfg.hop_samples();
}

MfccExtractor::MfccExtractor(MfccConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  const std::size_t w = cfg_.window_samples();
  window_.resize(w);
  for (std::size_t n = 0; n < w; ++n) {
    window_[n] = w == 1 ? 1.0 : 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / static_cast<double>(w - 1));
  }
  filterbank_ = mel_filterbank(cfg_);

  const auto m = static_cast<std::size_t>(cfg_.n_mels);
  dct_.assign(cfg_.n_coeffs, std::vector<double>(m));
  for (std::size_t k = 0; k < dct_.size(); ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
      dct_[k][j] = scale * std::cos(std::numbers::pi * static_cast<double>(k) * (j + 0.5) / static_cast<double>(m));
    }
  }
  plan_ = std::make_unique<FftPlan>(cfg_.fft_size);
}

MfccExtractor::~MfccExtractor() = default;

FeatureSequence MfccExtractor::extract(std::span<const float> samples, int sample_rate_hz) const {
  require(sample_rate_hz == cfg_.sample_rate_hz, Errc::invalid_argument,
          "audio sample rate " + std::to_string(sample_rate_hz) + " Hz does not match configured " +
              std::to_string(cfg_.sample_rate_hz) + " Hz");
  const std::size_t frames = mfcc_frame_count(samples.size(), cfg_);
  require(frames >= 1, Errc::empty_input,
          "audio has " + std::to_string(samples.size()) + " samples, shorter than one window");

  std::vector<double> emphasised(samples.size());
  emphasised[0] = samples[0];
  for (std::size_t n = 1; n < samples.size(); ++n) {
    emphasised[n] = static_cast<double>(samples[n]) - cfg_.pre_emphasis * static_cast<double>(samples[n - 1]);
  }

  const auto fft_size = static_cast<std::size_t>(cfg_.fft_size);
  const std::size_t bins = fft_size / 2 + 1;
  const std::size_t hop = cfg_.hop_samples();
  FftwBuffer buf(fft_size);
  std::vector<double> magnitude(bins);
  std::vector<double> log_mel(filterbank_.size());
  std::vector<float> out;
  out.reserve(frames * dct_.size());

  for (std::size_t t = 0; t < frames; ++t) {
    const double* frame = emphasised.data() + t * hop;
    std::fill(buf.real, buf.real + fft_size, 0.0);
    for (std::size_t n = 0; n < window_.size(); ++n) buf.real[n] = frame[n] * window_[n];
    fftw_execute_dft_r2c(plan_->plan, buf.real, buf.spectrum);
    for (std::size_t k = 0; k < bins; ++k) magnitude[k] = std::hypot(buf.spectrum[k][0], buf.spectrum[k][1]);

    for (std::size_t m = 0; m < filterbank_.size(); ++m) {
      double energy = 0.0;
      for (std::size_t k = 0; k < bins; ++k) energy += filterbank_[m][k] * magnitude[k];
      log_mel[m] = std::log(std::max(energy, kLogFloor));
    }
    for (const auto& basis : dct_) {
      double c = 0.0;
      for (std::size_t m = 0; m < basis.size(); ++m) c += basis[m] * log_mel[m];
      out.push_back(static_cast<float>(c));
    }
  }
  const float frame_rate = static_cast<float>(cfg_.sample_rate_hz) / static_cast<float>(hop);
  return FeatureSequence(frames, dct_.size(), std::move(out), frame_rate);
}

FeatureSequence MfccExtractor::extract(const Audio& audio) const {
  require(audio.channels == 1, Errc::unsupported_format,
          "mono required, got " + std::to_string(audio.channels) + " channels");
  return extract(audio.samples, audio.sample_rate_hz);
}

FeatureSequence extract_mfcc(const Audio& audio, const MfccConfig& cfg) { return MfccExtractor(cfg).extract(audio); }

}  // namespace fsc
