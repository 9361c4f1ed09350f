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

#ifndef FSC_SYNTHETIC_HPP
#define FSC_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fsc/manifest.hpp"
#include "fsc/seqdata.hpp"
#include "fsc/wav.hpp"

namespace fsc::synth {

/// Desk-scale stand-in for a reading-assessment corpus. Every word class is
/// a smooth random trajectory in R^dims; recordings are randomly
/// time-warped, noisy samples of a trajectory.
///
/// Negatives presented for class c are either a different word, or (with
/// probability `misreading_fraction`) c's own trajectory with its halves
/// swapped, which keeps the frame distribution but breaks the order.
/// Impostor classes replace their negatives with a near-duplicate word whose
/// first third is pulled `impostor_blend` of the way toward another
/// trajectory.
struct ClassroomConfig {
  std::size_t n_classes = 16;
  std::size_t n_impostor_classes = 3;
  std::size_t templates_per_class = 15;
  std::size_t min_positives = 6;  // per class, per split
  std::size_t max_positives = 15;
  std::size_t dims = 8;
  std::size_t min_length = 20;
  std::size_t max_length = 40;
  double noise_sigma = 0.05;
  // Per-class noise is noise_sigma * exp(spread * u), u uniform in [-1, 1].
  double noise_scale_spread = 0.0;
  double misreading_fraction = 0.0;
  double impostor_blend = 0.4;
  std::uint64_t seed = 1;
};

struct Recording {
  ManifestEntry entry;  // path left empty until written
  FeatureSequence features;
};

struct Classroom {
  std::vector<std::string> classes;
  std::vector<std::string> impostor_classes;
  std::vector<Recording> recordings;  // templates, then dev, then test
};

Classroom generate_classroom(const ClassroomConfig& cfg);

// Writes one .fseq per recording plus manifest.jsonl; returns the manifest path.
std::filesystem::path write_classroom(const Classroom& classroom, const std::filesystem::path& dir);

/// A "word" of `freqs_hz.size()` equal-length tone segments at 16 kHz, with
/// each frequency scaled by `pitch_factor` and white noise of the given
/// standard deviation.
Audio synthesize_tone_word(const std::vector<double>& freqs_hz, double seconds, double pitch_factor,
                           double noise_sigma, std::uint64_t seed);

}  // namespace fsc::synth

#endif  // FSC_SYNTHETIC_HPP
