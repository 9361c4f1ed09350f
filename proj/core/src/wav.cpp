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

#include "fsc/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "fsc/error.hpp"
#include "fsc/io.hpp"

namespace fsc {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t get_u16_le(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

void put_u16_le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

}  // namespace

Audio decode_wav(std::span<const std::uint8_t> bytes) {
  require(bytes.size() >= 12 && tag_is(bytes, 0, "RIFF") && tag_is(bytes, 8, "WAVE"), Errc::bad_magic,
          "not a RIFF/WAVE file");
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  std::span<const std::uint8_t> data;
  bool have_data = false;

  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::uint32_t size = io::get_u32_le(bytes, off + 4);
    const std::size_t body = off + 8;
    const std::size_t avail = std::min<std::size_t>(size, bytes.size() - body);
    if (tag_is(bytes, off, "fmt ")) {
      require(avail >= 16, Errc::truncated, "fmt chunk too short");
      format = get_u16_le(bytes, body);
      channels = get_u16_le(bytes, body + 2);
      rate = io::get_u32_le(bytes, body + 4);
      bits = get_u16_le(bytes, body + 14);
      if (format == kFormatExtensible) {
        require(avail >= 26, Errc::truncated, "extensible fmt chunk too short");
        format = get_u16_le(bytes, body + 24);
      }
      have_fmt = true;
    } else if (tag_is(bytes, off, "data")) {
      require(size <= bytes.size() - body, Errc::truncated, "data chunk extends past end of file");
      data = bytes.subspan(body, size);
      have_data = true;
    }
    off = body + size + (size & 1U);
  }
  require(have_fmt, Errc::unsupported_format, "missing fmt chunk");
  require(have_data, Errc::truncated, "missing data chunk");
  require(channels >= 1, Errc::unsupported_format, "zero channels");
  require(rate > 0, Errc::unsupported_format, "zero sample rate");

  Audio audio;
  audio.sample_rate_hz = static_cast<int>(rate);
  audio.channels = channels;
  if (format == kFormatPcm && bits == 16) {
    const std::size_t n = data.size() / 2;
    audio.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      audio.samples[i] = static_cast<float>(static_cast<std::int16_t>(get_u16_le(data, 2 * i))) / 32768.0F;
    }
  } else if (format == kFormatFloat && bits == 32) {
    const std::size_t n = data.size() / 4;
    audio.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) audio.samples[i] = io::get_f32_le(data, 4 * i);
  } else {
    fail(Errc::unsupported_format,
         "only 16-bit PCM and 32-bit float are supported (format " + std::to_string(format) + ", " +
             std::to_string(bits) + " bits)");
  }
  for (float s : audio.samples) require(std::isfinite(s), Errc::non_finite, "non-finite sample");
  return audio;
}

Audio read_wav(const std::filesystem::path& path) {
  try {
    return decode_wav(io::read_file(path));
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

std::vector<std::uint8_t> encode_wav_pcm16(const Audio& audio) {
  require(audio.channels >= 1 && audio.sample_rate_hz > 0, Errc::invalid_argument, "bad audio header values");
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  io::put_u32_le(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  io::put_u32_le(out, 16);
  put_u16_le(out, kFormatPcm);
  put_u16_le(out, static_cast<std::uint16_t>(audio.channels));
  io::put_u32_le(out, static_cast<std::uint32_t>(audio.sample_rate_hz));
  io::put_u32_le(out, static_cast<std::uint32_t>(audio.sample_rate_hz * audio.channels * 2));
  put_u16_le(out, static_cast<std::uint16_t>(audio.channels * 2));
  put_u16_le(out, 16);
  put_tag(out, "data");
  io::put_u32_le(out, data_bytes);
  for (float s : audio.samples) {
    const float clipped = std::clamp(s, -1.0F, 1.0F);
    const auto q = static_cast<std::int16_t>(std::lround(std::min(clipped * 32768.0F, 32767.0F)));
    put_u16_le(out, static_cast<std::uint16_t>(q));
  }
  return out;
}

void write_wav_pcm16(const Audio& audio, const std::filesystem::path& path) {
  io::write_file_atomic(path, encode_wav_pcm16(audio));
}

}  // namespace fsc
