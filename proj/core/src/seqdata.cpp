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

#include "fsc/seqdata.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "fsc/error.hpp"
#include "fsc/io.hpp"
#include "fsc/log.hpp"

namespace fsc {
namespace {

constexpr std::array<std::uint8_t, 4> kFseqMagic{'F', 'S', 'Q', '1'};
constexpr std::array<std::uint8_t, 4> kCseqMagic{'C', 'S', 'Q', '1'};
constexpr std::size_t kFseqHeader = 16;
constexpr std::size_t kCseqHeader = 12;

bool has_magic(std::span<const std::uint8_t> bytes, const std::array<std::uint8_t, 4>& magic) {
  return bytes.size() >= 4 && std::equal(magic.begin(), magic.end(), bytes.begin());
}

std::uint32_t checked_u32(std::size_t value, const char* what) {
  require(value <= std::numeric_limits<std::uint32_t>::max(), Errc::invalid_argument,
          std::string(what) + " does not fit in u32");
  return static_cast<std::uint32_t>(value);
}

}  // namespace

FeatureSequence::FeatureSequence(std::size_t frames, std::size_t dims, std::vector<float> values,
                                 std::optional<float> frame_rate_hz)
    : frames_(frames), dims_(dims), values_(std::move(values)), frame_rate_hz_(frame_rate_hz) {
  require(frames_ >= 1, Errc::empty_input, "feature sequence needs at least one frame");
  require(dims_ >= 1, Errc::invalid_argument, "feature sequence needs at least one dimension");
  require(values_.size() == frames_ * dims_, Errc::dimension_mismatch,
          "expected " + std::to_string(frames_ * dims_) + " values, got " + std::to_string(values_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(std::isfinite(values_[i]), Errc::non_finite,
            "frame " + std::to_string(i / dims_) + " dim " + std::to_string(i % dims_));
  }
  if (frame_rate_hz_) {
    require(std::isfinite(*frame_rate_hz_) && *frame_rate_hz_ > 0.0F, Errc::invalid_argument,
            "frame rate must be positive");
  }
}

FeatureSequence FeatureSequence::from_rows(const std::vector<std::vector<float>>& rows,
                                           std::optional<float> frame_rate_hz) {
  require(!rows.empty(), Errc::empty_input, "feature sequence needs at least one frame");
  const std::size_t dims = rows.front().size();
  std::vector<float> values;
  values.reserve(rows.size() * dims);
  for (const auto& row : rows) {
    require(row.size() == dims, Errc::dimension_mismatch, "rows have differing dimensions");
    values.insert(values.end(), row.begin(), row.end());
  }
  return FeatureSequence(rows.size(), dims, std::move(values), frame_rate_hz);
}

CodeSequence::CodeSequence(std::vector<std::uint32_t> codes, std::uint32_t alphabet_size)
    : codes_(std::move(codes)), alphabet_size_(alphabet_size) {
  require(!codes_.empty(), Errc::empty_input, "code sequence needs at least one code");
  require(alphabet_size_ >= 1, Errc::invalid_argument, "alphabet size must be positive");
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    require(codes_[i] < alphabet_size_, Errc::invalid_code,
            "code " + std::to_string(codes_[i]) + " at position " + std::to_string(i) +
                " is not below alphabet size " + std::to_string(alphabet_size_));
  }
}

Codebook::Codebook(FeatureSequence centroids) : centroids_(std::move(centroids)) {
  std::set<std::vector<float>> seen;
  for (std::size_t k = 0; k < centroids_.length(); ++k) {
    auto c = centroids_.frame(k);
    if (!seen.emplace(c.begin(), c.end()).second) {
      log::warn("codebook centroid " + std::to_string(k) + " duplicates an earlier centroid");
    }
  }
}

std::size_t sequence_length(const Sequence& seq) {
  return std::visit([](const auto& s) { return s.length(); }, seq);
}

std::vector<std::uint8_t> encode_fseq(const FeatureSequence& seq) {
  std::vector<std::uint8_t> out(kFseqMagic.begin(), kFseqMagic.end());
  out.reserve(kFseqHeader + 4 * seq.values().size());
  io::put_u32_le(out, checked_u32(seq.length(), "frame count"));
  io::put_u32_le(out, checked_u32(seq.dims(), "dimension"));
  io::put_f32_le(out, seq.frame_rate_hz().value_or(0.0F));
  for (float v : seq.values()) io::put_f32_le(out, v);
  return out;
}

FeatureSequence decode_fseq(std::span<const std::uint8_t> bytes) {
  require(has_magic(bytes, kFseqMagic), Errc::bad_magic, "not an FSQ1 file");
  require(bytes.size() >= kFseqHeader, Errc::truncated, "header shorter than 16 bytes");
  const std::uint64_t frames = io::get_u32_le(bytes, 4);
  const std::uint64_t dims = io::get_u32_le(bytes, 8);
  const float rate = io::get_f32_le(bytes, 12);
  const std::uint64_t count = frames * dims;
  const std::uint64_t available = (bytes.size() - kFseqHeader) / 4;
  require(count <= available, Errc::truncated,
          "header declares " + std::to_string(count) + " floats, payload holds " + std::to_string(available));
  require(kFseqHeader + 4 * count == bytes.size(), Errc::truncated, "trailing bytes after payload");
  std::vector<float> values(count);
  for (std::uint64_t i = 0; i < count; ++i) values[i] = io::get_f32_le(bytes, kFseqHeader + 4 * i);
  std::optional<float> frame_rate;
  if (rate != 0.0F) frame_rate = rate;
  return FeatureSequence(frames, dims, std::move(values), frame_rate);
}

std::vector<std::uint8_t> encode_cseq(const CodeSequence& seq) {
  std::vector<std::uint8_t> out(kCseqMagic.begin(), kCseqMagic.end());
  out.reserve(kCseqHeader + 4 * seq.length());
  io::put_u32_le(out, checked_u32(seq.length(), "code count"));
  io::put_u32_le(out, seq.alphabet_size());
  for (std::uint32_t c : seq.codes()) io::put_u32_le(out, c);
  return out;
}

CodeSequence decode_cseq(std::span<const std::uint8_t> bytes) {
  require(has_magic(bytes, kCseqMagic), Errc::bad_magic, "not a CSQ1 file");
  require(bytes.size() >= kCseqHeader, Errc::truncated, "header shorter than 12 bytes");
  const std::uint64_t count = io::get_u32_le(bytes, 4);
  const std::uint32_t alphabet = io::get_u32_le(bytes, 8);
  const std::uint64_t available = (bytes.size() - kCseqHeader) / 4;
  require(count <= available, Errc::truncated,
          "header declares " + std::to_string(count) + " codes, payload holds " + std::to_string(available));
  require(kCseqHeader + 4 * count == bytes.size(), Errc::truncated, "trailing bytes after payload");
  std::vector<std::uint32_t> codes(count);
  for (std::uint64_t i = 0; i < count; ++i) codes[i] = io::get_u32_le(bytes, kCseqHeader + 4 * i);
  return CodeSequence(std::move(codes), alphabet);
}

void write_fseq(const FeatureSequence& seq, const std::filesystem::path& path) {
  io::write_file_atomic(path, encode_fseq(seq));
}

FeatureSequence read_fseq(const std::filesystem::path& path) {
  try {
    return decode_fseq(io::read_file(path));
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

void write_cseq(const CodeSequence& seq, const std::filesystem::path& path) {
  io::write_file_atomic(path, encode_cseq(seq));
}

CodeSequence read_cseq(const std::filesystem::path& path) {
  try {
    return decode_cseq(io::read_file(path));
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

void write_codebook(const Codebook& codebook, const std::filesystem::path& path) {
  write_fseq(codebook.centroids(), path);
}

Codebook read_codebook(const std::filesystem::path& path) { return Codebook(read_fseq(path)); }

}  // namespace fsc
