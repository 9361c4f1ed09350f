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

#ifndef FSC_BARYCENTRE_HPP
#define FSC_BARYCENTRE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsc/seqdata.hpp"

namespace fsc {

/// Index of the first template (input order) whose length equals the lower
/// median of the sorted lengths.
std::size_t median_length_index(std::span<const std::size_t> lengths);
std::size_t median_length_prototype(std::span<const FeatureSequence> templates);
std::size_t median_length_prototype(std::span<const CodeSequence> templates);

struct DbaConfig {
  std::size_t max_iters = 10;
  double rel_tolerance = 1e-6;  // on total raw DTW cost

  void validate() const;
};

struct DbaResult {
  FeatureSequence barycentre;
  double initial_cost = 0.0;      // total raw DTW cost of the starting prototype
  std::vector<double> cost_trace;  // total raw DTW cost after each accepted iteration
  std::size_t iterations = 0;
  // True when an update would have raised the cost and was discarded.
  bool stopped_on_increase = false;
};

/// DTW barycentre averaging. Starts from the median-length template; each
/// iteration aligns every template to the prototype (raw DTW cost) and
/// replaces each prototype frame with the arithmetic mean of the template
/// frames mapped onto it. The prototype length never changes.
///
/// The mean is not the exact minimiser of summed cosine distance, so an
/// update can occasionally raise the total cost; such an update is rejected
/// and iteration stops, keeping the cost trace non-increasing.
DbaResult dba(std::span<const FeatureSequence> templates, const DbaConfig& cfg = {});

// Total raw DTW cost from `prototype` to every template.
double total_dtw_cost(const FeatureSequence& prototype, std::span<const FeatureSequence> templates);

enum class EdbAlphabet { full_codebook, observed_codes };

struct EdbConfig {
  EdbAlphabet alphabet = EdbAlphabet::full_codebook;
  std::size_t max_iters = 1000;

  void validate() const;
};

struct EdbResult {
  CodeSequence median;
  double initial_objective = 0.0;
  std::vector<double> objective_trace;  // total NED at the end of each round
  std::size_t rounds = 0;
  std::size_t accepted_moves = 0;
  bool hit_max_iters = false;
};

/// Sum of ned(prototype, t) over all templates, accumulated in template order.
double total_ned(std::span<const std::uint32_t> prototype, std::span<const CodeSequence> templates);

/// Edit-distance barycentre (approximate median string) by steepest-descent
/// local search. Each round scores every neighbour of the prototype:
///   1. deletion at each position (skipped for length-1 prototypes),
///   2. substitution at each position by each other alphabet symbol,
///   3. insertion of each symbol before each position, then at the end,
/// positions left to right, symbols ascending. The best strictly improving
/// neighbour is taken; ties keep the earliest in that order. Stops when no
/// neighbour improves or after max_iters rounds.
EdbResult edb(std::span<const CodeSequence> templates, const EdbConfig& cfg = {});

}  // namespace fsc

#endif  // FSC_BARYCENTRE_HPP
