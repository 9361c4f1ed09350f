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

#ifndef FSC_SEQDATA_HPP
#define FSC_SEQDATA_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace fsc {

/// A T x D matrix of per-frame feature vectors, stored row-major as float32.
///
/// Construction validates the shape (T >= 1, D >= 1) and that every value
/// is finite; the object is immutable afterwards.
class FeatureSequence {
 public:
  FeatureSequence(std::size_t frames, std::size_t dims, std::vector<float> values,
                  std::optional<float> frame_rate_hz = std::nullopt);

  static FeatureSequence from_rows(const std::vector<std::vector<float>>& rows,
                                   std::optional<float> frame_rate_hz = std::nullopt);

  std::size_t length() const noexcept { return frames_; }
  std::size_t dims() const noexcept { return dims_; }
  std::optional<float> frame_rate_hz() const noexcept { return frame_rate_hz_; }

  std::span<const float> frame(std::size_t t) const noexcept {
    return {values_.data() + t * dims_, dims_};
  }
  std::span<const float> values() const noexcept { return values_; }

  friend bool operator==(const FeatureSequence&, const FeatureSequence&) = default;

 private:
  std::size_t frames_;
  std::size_t dims_;
  std::vector<float> values_;
  std::optional<float> frame_rate_hz_;
};

/// A length-T sequence of codes drawn from an alphabet of size K.
class CodeSequence {
 public:
  CodeSequence(std::vector<std::uint32_t> codes, std::uint32_t alphabet_size);

  std::size_t length() const noexcept { return codes_.size(); }
  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const std::uint32_t> codes() const noexcept { return codes_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return codes_[i]; }

  friend bool operator==(const CodeSequence&, const CodeSequence&) = default;

 private:
  std::vector<std::uint32_t> codes_;
  std::uint32_t alphabet_size_;
};

/// K centroids of dimension D. Persisted as a K x D `.fseq` file.
class Codebook {
 public:
  explicit Codebook(FeatureSequence centroids);

  std::size_t size() const noexcept { return centroids_.length(); }
  std::size_t dims() const noexcept { return centroids_.dims(); }
  std::span<const float> centroid(std::size_t k) const noexcept { return centroids_.frame(k); }
  const FeatureSequence& centroids() const noexcept { return centroids_; }

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  FeatureSequence centroids_;
};

using Sequence = std::variant<FeatureSequence, CodeSequence>;

std::size_t sequence_length(const Sequence& seq);

// .fseq: "FSQ1", u32 T, u32 D, f32 frame rate (0 = absent), T*D f32.
// .cseq: "CSQ1", u32 T, u32 K, T u32 codes. All little-endian.
std::vector<std::uint8_t> encode_fseq(const FeatureSequence& seq);
FeatureSequence decode_fseq(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_cseq(const CodeSequence& seq);
CodeSequence decode_cseq(std::span<const std::uint8_t> bytes);

void write_fseq(const FeatureSequence& seq, const std::filesystem::path& path);
FeatureSequence read_fseq(const std::filesystem::path& path);
void write_cseq(const CodeSequence& seq, const std::filesystem::path& path);
CodeSequence read_cseq(const std::filesystem::path& path);

void write_codebook(const Codebook& codebook, const std::filesystem::path& path);
Codebook read_codebook(const std::filesystem::path& path);

}  // namespace fsc

#endif  // FSC_SEQDATA_HPP
