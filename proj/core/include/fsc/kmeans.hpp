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

#ifndef FSC_KMEANS_HPP
#define FSC_KMEANS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsc/seqdata.hpp"

namespace fsc {

struct KMeansConfig {
  std::size_t k = 100;
  std::size_t max_iters = 100;
  double tolerance = 1e-6;  // relative inertia change between iterations
  std::uint64_t seed = 0;

  void validate() const;
};

struct KMeansResult {
  Codebook codebook;
  // Inertia after each Lloyd iteration (sum of squared distances to the
  // assigned centroid). Non-increasing.
  std::vector<double> inertia_trace;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lloyd's algorithm over the pooled frames of `data`, k-means++ seeding
/// from Xoshiro256(cfg.seed). Clusters that empty out are re-seeded with
/// the frame farthest from its current centroid. Assignment ties go to the
/// lowest centroid index, and all accumulation is sequential in double, so
/// the result depends only on (data, cfg).
KMeansResult train_codebook(std::span<const FeatureSequence> data, const KMeansConfig& cfg);

/// Nearest centroid by Euclidean distance, ties to the lowest index. With
/// `dedup`, runs of equal consecutive codes collapse to one code.
CodeSequence quantize(const FeatureSequence& seq, const Codebook& codebook, bool dedup = false);

std::size_t nearest_centroid(std::span<const float> frame, const Codebook& codebook);

double inertia(std::span<const FeatureSequence> data, const Codebook& codebook);

}  // namespace fsc

#endif  // FSC_KMEANS_HPP
