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

#ifndef FSC_ALIGN_HPP
#define FSC_ALIGN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fsc/seqdata.hpp"

namespace fsc {

/// Monotone, contiguous alignment between frames of `a` (i) and `b` (j).
struct WarpPath {
  std::vector<std::pair<std::size_t, std::size_t>> steps;

  std::size_t size() const noexcept { return steps.size(); }
};

// Starts at (0,0), ends at (len_a-1, len_b-1), each step advances i, j or both by one.
bool is_valid_path(const WarpPath& path, std::size_t len_a, std::size_t len_b);

struct DtwResult {
  double raw_cost = 0.0;         // sum of frame distances along the path
  WarpPath path;
  double normalized_cost = 0.0;  // raw_cost / path.size()
};

/// 1 - cos(u, v), clamped to [0, 2]. When either norm is below 1e-12 the
/// similarity is taken as 0 and the distance is 1.
double cosine_distance(std::span<const float> u, std::span<const float> v);

/// Classic DTW with cosine frame distance, steps (i-1,j), (i,j-1),
/// (i-1,j-1) at unit weight, no band. Backtracking prefers the diagonal,
/// then the vertical (i-1,j), then the horizontal (i,j-1) predecessor.
DtwResult dtw(const FeatureSequence& a, const FeatureSequence& b);

// Raw cost only; skips path recovery.
double dtw_cost(const FeatureSequence& a, const FeatureSequence& b);

/// Levenshtein distance with unit insertion, deletion and substitution
/// costs. Two-row DP, O(|a||b|) time.
std::size_t edit_distance(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::size_t edit_distance(const CodeSequence& a, const CodeSequence& b);

// edit_distance / max(|a|, |b|), in [0, 1].
double ned(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
double ned(const CodeSequence& a, const CodeSequence& b);

}  // namespace fsc

#endif  // FSC_ALIGN_HPP
