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

#include "fsc/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fsc/error.hpp"
#include "fsc/log.hpp"
#include "fsc/rng.hpp"

namespace fsc {
namespace {

// Pooled frames of all sequences, widened to double.
struct FramePool {
  std::size_t count = 0;
  std::size_t dims = 0;
  std::vector<double> values;

  const double* row(std::size_t i) const { return values.data() + i * dims; }
};

FramePool pool_frames(std::span<const FeatureSequence> data) {
  require(!data.empty(), Errc::empty_input, "no training sequences");
  FramePool pool;
  pool.dims = data.front().dims();
  for (const auto& seq : data) {
    require(seq.dims() == pool.dims, Errc::dimension_mismatch,
            "training sequences mix dimensions " + std::to_string(pool.dims) + " and " + std::to_string(seq.dims()));
    pool.values.insert(pool.values.end(), seq.values().begin(), seq.values().end());
    pool.count += seq.length();
  }
  return pool;
}

double squared_distance(const double* a, const double* b, std::size_t dims) {
  double sum = 0.0;
  for (std::size_t d = 0; d < dims; ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

// Returns (index, squared distance) of the nearest centroid, lowest index on ties.
std::pair<std::size_t, double> nearest(const double* x, const std::vector<double>& centroids, std::size_t k,
                                       std::size_t dims) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    const double d = squared_distance(x, centroids.data() + c * dims, dims);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return {best, best_d};
}

std::vector<double> kmeans_plus_plus(const FramePool& pool, std::size_t k, Xoshiro256& rng) {
  const std::size_t dims = pool.dims;
  std::vector<double> centroids;
  centroids.reserve(k * dims);
  auto add = [&](std::size_t i) { centroids.insert(centroids.end(), pool.row(i), pool.row(i) + dims); };

  add(static_cast<std::size_t>(rng.below(pool.count)));
  std::vector<double> d2(pool.count);
  for (std::size_t i = 0; i < pool.count; ++i) d2[i] = squared_distance(pool.row(i), centroids.data(), dims);

  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t chosen = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      chosen = pool.count - 1;
      for (std::size_t i = 0; i < pool.count; ++i) {
        acc += d2[i];
        if (acc > target && d2[i] > 0.0) {
          chosen = i;
          break;
        }
      }
      // Guard against landing on a zero-weight tail through rounding.
      while (d2[chosen] == 0.0 && chosen > 0) --chosen;
    } else {
      chosen = static_cast<std::size_t>(rng.below(pool.count));
    }
    add(chosen);
    const double* newest = centroids.data() + c * dims;
    for (std::size_t i = 0; i < pool.count; ++i) d2[i] = std::min(d2[i], squared_distance(pool.row(i), newest, dims));
  }
  return centroids;
}

}  // namespace

void KMeansConfig::validate() const {
  require(k >= 1, Errc::invalid_argument, "k must be at least 1");
  require(max_iters >= 1, Errc::invalid_argument, "max_iters must be at least 1");
  require(tolerance >= 0.0 && std::isfinite(tolerance), Errc::invalid_argument, "tolerance must be >= 0");
}

KMeansResult train_codebook(std::span<const FeatureSequence> data, const KMeansConfig& cfg) {
  cfg.validate();
  const FramePool pool = pool_frames(data);
  require(pool.count >= cfg.k, Errc::invalid_argument,
          "need at least k=" + std::to_string(cfg.k) + " frames, have " + std::to_string(pool.count));
  const std::size_t k = cfg.k;
  const std::size_t dims = pool.dims;

  Xoshiro256 rng(cfg.seed);
  std::vector<double> centroids = kmeans_plus_plus(pool, k, rng);
  std::vector<std::size_t> assignment(pool.count);
  std::vector<double> dist(pool.count);
  std::vector<double> sums(k * dims);
  std::vector<std::size_t> counts(k);

  auto assign = [&] {
    double total = 0.0;
    for (std::size_t i = 0; i < pool.count; ++i) {
      auto [c, d] = nearest(pool.row(i), centroids, k, dims);
      assignment[i] = c;
      dist[i] = d;
      total += d;
    }
    return total;
  };

  KMeansResult result{Codebook(FeatureSequence(1, 1, {0.0F})), {}, 0, false};
  double previous = assign();
  for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < pool.count; ++i) {
      const std::size_t c = assignment[i];
      ++counts[c];
      const double* x = pool.row(i);
      for (std::size_t d = 0; d < dims; ++d) sums[c * dims + d] += x[d];
    }
    std::vector<bool> taken(pool.count, false);
    for (std::size_t c = 0; c < k; ++c) {
      double* centroid = centroids.data() + c * dims;
      if (counts[c] > 0) {
        for (std::size_t d = 0; d < dims; ++d) centroid[d] = sums[c * dims + d] / static_cast<double>(counts[c]);
        continue;
      }
      // Empty cluster: move it onto the frame farthest from its centroid.
      std::size_t far = pool.count;
      for (std::size_t i = 0; i < pool.count; ++i) {
        if (!taken[i] && (far == pool.count || dist[i] > dist[far])) far = i;
      }
      taken[far] = true;
      std::copy(pool.row(far), pool.row(far) + dims, centroid);
      log::debug("k-means: re-seeded empty cluster " + std::to_string(c) + " at frame " + std::to_string(far));
    }

    const double current = assign();
    // Allow for rounding in the centroid means, nothing more.
    require(current <= previous * (1.0 + 1e-12) + 1e-12, Errc::invariant,
            "k-means inertia increased from " + std::to_string(previous) + " to " + std::to_string(current));
    result.inertia_trace.push_back(current);
    result.iterations = iter;
    const double change = previous > 0.0 ? (previous - current) / previous : 0.0;
    previous = current;
    if (change < cfg.tolerance || current == 0.0) {
      result.converged = true;
      break;
    }
  }

  std::vector<float> out(centroids.begin(), centroids.end());
  result.codebook = Codebook(FeatureSequence(k, dims, std::move(out)));
  return result;
}

std::size_t nearest_centroid(std::span<const float> frame, const Codebook& codebook) {
  require(frame.size() == codebook.dims(), Errc::dimension_mismatch,
          "frame has " + std::to_string(frame.size()) + " dims, codebook " + std::to_string(codebook.dims()));
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < codebook.size(); ++c) {
    const auto centroid = codebook.centroid(c);
    double d = 0.0;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const double diff = static_cast<double>(frame[i]) - static_cast<double>(centroid[i]);
      d += diff * diff;
    }
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

CodeSequence quantize(const FeatureSequence& seq, const Codebook& codebook, bool dedup) {
  require(seq.dims() == codebook.dims(), Errc::dimension_mismatch,
          "sequence has " + std::to_string(seq.dims()) + " dims, codebook " + std::to_string(codebook.dims()));
  std::vector<std::uint32_t> codes;
  codes.reserve(seq.length());
  for (std::size_t t = 0; t < seq.length(); ++t) {
    const auto code = static_cast<std::uint32_t>(nearest_centroid(seq.frame(t), codebook));
    if (dedup && !codes.empty() && codes.back() == code) continue;
    codes.push_back(code);
  }
  return CodeSequence(std::move(codes), static_cast<std::uint32_t>(codebook.size()));
}

double inertia(std::span<const FeatureSequence> data, const Codebook& codebook) {
  double total = 0.0;
  for (const auto& seq : data) {
    for (std::size_t t = 0; t < seq.length(); ++t) {
      const auto frame = seq.frame(t);
      const auto centroid = codebook.centroid(nearest_centroid(frame, codebook));
      for (std::size_t d = 0; d < frame.size(); ++d) {
        const double diff = static_cast<double>(frame[d]) - static_cast<double>(centroid[d]);
        total += diff * diff;
      }
    }
  }
  return total;
}

}  // namespace fsc
