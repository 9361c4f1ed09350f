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

#include "fsc/align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fsc/error.hpp"

namespace fsc {
namespace {

constexpr double kMinNorm = 1e-12;

void check_dims(const FeatureSequence& a, const FeatureSequence& b) {
  require(a.dims() == b.dims(), Errc::dimension_mismatch,
          "sequences have " + std::to_string(a.dims()) + " and " + std::to_string(b.dims()) + " dims");
}

// Frame-pair cosine distances, row-major len_a x len_b. Norms are computed
// once per frame.
std::vector<double> cost_matrix(const FeatureSequence& a, const FeatureSequence& b) {
  auto norms = [](const FeatureSequence& s) {
    std::vector<double> out(s.length());
    for (std::size_t t = 0; t < s.length(); ++t) {
      double sq = 0.0;
      for (float x : s.frame(t)) sq += static_cast<double>(x) * x;
      out[t] = std::sqrt(sq);
    }
    return out;
  };
  const auto na = norms(a);
  const auto nb = norms(b);
  const std::size_t rows = a.length();
  const std::size_t cols = b.length();
  std::vector<double> cost(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto fa = a.frame(i);
    for (std::size_t j = 0; j < cols; ++j) {
      if (na[i] < kMinNorm || nb[j] < kMinNorm) {
        cost[i * cols + j] = 1.0;
        continue;
      }
      const auto fb = b.frame(j);
      double dot = 0.0;
      for (std::size_t d = 0; d < fa.size(); ++d) dot += static_cast<double>(fa[d]) * fb[d];
      cost[i * cols + j] = std::clamp(1.0 - dot / (na[i] * nb[j]), 0.0, 2.0);
    }
  }
  return cost;
}

std::vector<double> accumulate(const std::vector<double>& cost, std::size_t rows, std::size_t cols) {
  std::vector<double> acc(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double c = cost[i * cols + j];
      if (i == 0 && j == 0) {
        acc[0] = c;
      } else if (i == 0) {
        acc[j] = c + acc[j - 1];
      } else if (j == 0) {
        acc[i * cols] = c + acc[(i - 1) * cols];
      } else {
        const double diag = acc[(i - 1) * cols + j - 1];
        const double up = acc[(i - 1) * cols + j];
        const double left = acc[i * cols + j - 1];
        acc[i * cols + j] = c + std::min({diag, up, left});
      }
    }
  }
  return acc;
}

}  // namespace

bool is_valid_path(const WarpPath& path, std::size_t len_a, std::size_t len_b) {
  if (path.steps.empty() || len_a == 0 || len_b == 0) return false;
  if (path.steps.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
  if (path.steps.back() != std::pair<std::size_t, std::size_t>{len_a - 1, len_b - 1}) return false;
  for (std::size_t s = 1; s < path.steps.size(); ++s) {
    const auto [pi, pj] = path.steps[s - 1];
    const auto [i, j] = path.steps[s];
    const bool di = i == pi + 1;
    const bool dj = j == pj + 1;
    if (!((di && dj) || (di && j == pj) || (dj && i == pi))) return false;
  }
  return true;
}

double cosine_distance(std::span<const float> u, std::span<const float> v) {
  require(u.size() == v.size(), Errc::dimension_mismatch,
          "vectors have " + std::to_string(u.size()) + " and " + std::to_string(v.size()) + " dims");
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t d = 0; d < u.size(); ++d) {
    dot += static_cast<double>(u[d]) * v[d];
    uu += static_cast<double>(u[d]) * u[d];
    vv += static_cast<double>(v[d]) * v[d];
  }
  const double nu = std::sqrt(uu);
  const double nv = std::sqrt(vv);
  if (nu < kMinNorm || nv < kMinNorm) return 1.0;
  return std::clamp(1.0 - dot / (nu * nv), 0.0, 2.0);
}

DtwResult dtw(const FeatureSequence& a, const FeatureSequence& b) {
  check_dims(a, b);
  const std::size_t rows = a.length();
  const std::size_t cols = b.length();
  const auto acc = accumulate(cost_matrix(a, b), rows, cols);

  DtwResult result;
  result.raw_cost = acc.back();
  std::size_t i = rows - 1;
  std::size_t j = cols - 1;
  result.path.steps.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = acc[(i - 1) * cols + j - 1];
      const double up = acc[(i - 1) * cols + j];
      const double left = acc[i * cols + j - 1];
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    result.path.steps.emplace_back(i, j);
  }
  std::reverse(result.path.steps.begin(), result.path.steps.end());
  result.normalized_cost = result.raw_cost / static_cast<double>(result.path.size());
  return result;
}

double dtw_cost(const FeatureSequence& a, const FeatureSequence& b) {
  check_dims(a, b);
  return accumulate(cost_matrix(a, b), a.length(), b.length()).back();
}

std::size_t edit_distance(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row.back();
}

std::size_t edit_distance(const CodeSequence& a, const CodeSequence& b) {
  require(a.alphabet_size() == b.alphabet_size(), Errc::alphabet_mismatch,
          "alphabet sizes " + std::to_string(a.alphabet_size()) + " and " + std::to_string(b.alphabet_size()));
  return edit_distance(a.codes(), b.codes());
}

double ned(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  require(!a.empty() && !b.empty(), Errc::empty_input, "NED needs non-empty sequences");
  const std::size_t longest = std::max(a.size(), b.size());
  return static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

double ned(const CodeSequence& a, const CodeSequence& b) {
  require(a.alphabet_size() == b.alphabet_size(), Errc::alphabet_mismatch,
          "alphabet sizes " + std::to_string(a.alphabet_size()) + " and " + std::to_string(b.alphabet_size()));
  return ned(a.codes(), b.codes());
}

}  // namespace fsc
