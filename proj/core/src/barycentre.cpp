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

#include "fsc/barycentre.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fsc/align.hpp"
#include "fsc/error.hpp"

namespace fsc {
namespace {

// An EDB move must beat the current objective by more than this to count as
// an improvement; equal-valued objectives may differ in the last bits.
constexpr double kImprovementEpsilon = 1e-12;

template <typename Seq>
std::vector<std::size_t> lengths_of(std::span<const Seq> seqs) {
  std::vector<std::size_t> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(s.length());
  return out;
}

}  // namespace

std::size_t median_length_index(std::span<const std::size_t> lengths) {
  require(!lengths.empty(), Errc::empty_input, "no templates");
  std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t median = sorted[(sorted.size() - 1) / 2];
  return static_cast<std::size_t>(std::find(lengths.begin(), lengths.end(), median) - lengths.begin());
}

std::size_t median_length_prototype(std::span<const FeatureSequence> templates) {
  const auto lengths = lengths_of(templates);
  return median_length_index(lengths);
}

std::size_t median_length_prototype(std::span<const CodeSequence> templates) {
  const auto lengths = lengths_of(templates);
  return median_length_index(lengths);
}

void DbaConfig::validate() const {
  require(max_iters >= 1, Errc::invalid_argument, "DBA max_iters must be at least 1");
  require(rel_tolerance >= 0.0, Errc::invalid_argument, "DBA rel_tolerance must be >= 0");
}

double total_dtw_cost(const FeatureSequence& prototype, std::span<const FeatureSequence> templates) {
  double total = 0.0;
  for (const auto& t : templates) total += dtw_cost(prototype, t);
  return total;
}

DbaResult dba(std::span<const FeatureSequence> templates, const DbaConfig& cfg) {
  cfg.validate();
  require(!templates.empty(), Errc::empty_input, "DBA needs at least one template");
  const std::size_t dims = templates.front().dims();
  for (const auto& t : templates) {
    require(t.dims() == dims, Errc::dimension_mismatch, "templates mix feature dimensions");
  }

  FeatureSequence prototype = templates[median_length_prototype(templates)];
  const std::size_t length = prototype.length();

  std::vector<DtwResult> alignments;
  auto align_all = [&](const FeatureSequence& proto) {
    alignments.clear();
    double total = 0.0;
    for (const auto& t : templates) {
      alignments.push_back(dtw(proto, t));
      total += alignments.back().raw_cost;
    }
    return total;
  };

  DbaResult result{prototype, align_all(prototype), {}, 0, false};
  double current = result.initial_cost;

  std::vector<double> sums(length * dims);
  std::vector<std::size_t> counts(length);
  for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t n = 0; n < templates.size(); ++n) {
      for (const auto& [i, j] : alignments[n].path.steps) {
        const auto frame = templates[n].frame(j);
        for (std::size_t d = 0; d < dims; ++d) sums[i * dims + d] += frame[d];
        ++counts[i];
      }
    }
    std::vector<float> values(length * dims);
    for (std::size_t i = 0; i < length; ++i) {
      for (std::size_t d = 0; d < dims; ++d) {
        values[i * dims + d] = static_cast<float>(sums[i * dims + d] / static_cast<double>(counts[i]));
      }
    }
    FeatureSequence candidate(length, dims, std::move(values), prototype.frame_rate_hz());
    const auto saved = alignments;
    const double next = align_all(candidate);
    if (next > current) {
      alignments = saved;
      result.stopped_on_increase = true;
      break;
    }
    prototype = std::move(candidate);
    result.iterations = iter;
    result.cost_trace.push_back(next);
    const double decrease = current > 0.0 ? (current - next) / current : 0.0;
    current = next;
    if (decrease < cfg.rel_tolerance) break;
  }
  result.barycentre = std::move(prototype);
  return result;
}

void EdbConfig::validate() const {
  require(max_iters >= 1, Errc::invalid_argument, "EDB max_iters must be at least 1");
}

double total_ned(std::span<const std::uint32_t> prototype, std::span<const CodeSequence> templates) {
  double total = 0.0;
  for (const auto& t : templates) total += ned(prototype, t.codes());
  return total;
}

EdbResult edb(std::span<const CodeSequence> templates, const EdbConfig& cfg) {
  cfg.validate();
  require(!templates.empty(), Errc::empty_input, "EDB needs at least one template");
  const std::uint32_t alphabet_size = templates.front().alphabet_size();
  for (const auto& t : templates) {
    require(t.alphabet_size() == alphabet_size, Errc::alphabet_mismatch, "templates mix alphabet sizes");
  }

  std::vector<std::uint32_t> symbols;
  if (cfg.alphabet == EdbAlphabet::full_codebook) {
    symbols.resize(alphabet_size);
    for (std::uint32_t s = 0; s < alphabet_size; ++s) symbols[s] = s;
  } else {
    std::set<std::uint32_t> seen;
    for (const auto& t : templates) seen.insert(t.codes().begin(), t.codes().end());
    symbols.assign(seen.begin(), seen.end());
  }

  const auto& start = templates[median_length_prototype(templates)];
  std::vector<std::uint32_t> prototype(start.codes().begin(), start.codes().end());
  double current = total_ned(prototype, templates);
  EdbResult result{start, current, {}, 0, 0, false};

  std::vector<std::uint32_t> neighbour;
  std::vector<std::uint32_t> best;
  for (std::size_t round = 1;; ++round) {
    if (round > cfg.max_iters) {
      result.hit_max_iters = true;
      break;
    }
    result.rounds = round;
    double best_objective = current;
    bool improved = false;
    auto consider = [&] {
      const double objective = total_ned(neighbour, templates);
      if (objective < best_objective - kImprovementEpsilon) {
        best_objective = objective;
        best = neighbour;
        improved = true;
      }
    };

    const std::size_t n = prototype.size();
    if (n > 1) {
      for (std::size_t pos = 0; pos < n; ++pos) {
        neighbour.assign(prototype.begin(), prototype.end());
        neighbour.erase(neighbour.begin() + static_cast<std::ptrdiff_t>(pos));
        consider();
      }
    }
    for (std::size_t pos = 0; pos < n; ++pos) {
      for (std::uint32_t s : symbols) {
        if (s == prototype[pos]) continue;
        neighbour.assign(prototype.begin(), prototype.end());
        neighbour[pos] = s;
        consider();
      }
    }
    for (std::size_t pos = 0; pos <= n; ++pos) {
      for (std::uint32_t s : symbols) {
        neighbour.assign(prototype.begin(), prototype.end());
        neighbour.insert(neighbour.begin() + static_cast<std::ptrdiff_t>(pos), s);
        consider();
      }
    }

    if (!improved) {
      result.objective_trace.push_back(current);
      break;
    }
    require(best_objective < current, Errc::invariant, "EDB accepted a non-improving move");
    prototype = best;
    current = best_objective;
    ++result.accepted_moves;
    result.objective_trace.push_back(current);
  }
  result.median = CodeSequence(std::move(prototype), alphabet_size);
  return result;
}

}  // namespace fsc
