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

#ifndef FSC_WAV_HPP
#define FSC_WAV_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace fsc {

/// Interleaved PCM samples scaled to [-1, 1].
struct Audio {
  std::vector<float> samples;
  int sample_rate_hz = 0;
  int channels = 1;

  std::size_t frames() const { return channels > 0 ? samples.size() / channels : 0; }
};

// Accepts RIFF/WAVE with 16-bit integer PCM or 32-bit float samples
// (WAVE_FORMAT_EXTENSIBLE wrapping either is also accepted).
Audio decode_wav(std::span<const std::uint8_t> bytes);
Audio read_wav(const std::filesystem::path& path);

// Writes 16-bit PCM, clipping to [-1, 1].
std::vector<std::uint8_t> encode_wav_pcm16(const Audio& audio);
void write_wav_pcm16(const Audio& audio, const std::filesystem::path& path);

}  // namespace fsc

#endif  // FSC_WAV_HPP
