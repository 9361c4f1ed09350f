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

#include "fsc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fsc/error.hpp"
#include "fsc/io.hpp"
#include "fsc/rng.hpp"

namespace fsc::synth {
namespace {

constexpr std::size_t kHarmonics = 3;

double normal(Xoshiro256& rng) {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double uniform(Xoshiro256& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

struct Trajectory {
  std::vector<double> offset;                // dims
  std::vector<std::vector<double>> amp;      // kHarmonics x dims
  std::vector<std::vector<double>> phase;    // kHarmonics x dims

  std::vector<double> at(double t) const {
    std::vector<double> x = offset;
    for (std::size_t h = 0; h < amp.size(); ++h) {
      for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] += amp[h][d] * std::sin(2.0 * std::numbers::pi * static_cast<double>(h + 1) * t + phase[h][d]);
      }
    }
    return x;
  }
};

Trajectory random_trajectory(std::size_t dims, Xoshiro256& rng) {
  Trajectory tr;
  tr.offset.resize(dims);
  for (auto& v : tr.offset) v = normal(rng);
  tr.amp.assign(kHarmonics, std::vector<double>(dims));
  tr.phase.assign(kHarmonics, std::vector<double>(dims));
  for (std::size_t h = 0; h < kHarmonics; ++h) {
    for (std::size_t d = 0; d < dims; ++d) {
      tr.amp[h][d] = 0.8 * normal(rng) / static_cast<double>(h + 1);
      tr.phase[h][d] = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    }
  }
  return tr;
}

enum class Variant { plain, halves_swapped, impostor };

struct Word {
  Trajectory base;
  Trajectory onset;  // used by the impostor variant for t < 1/3
  std::size_t length = 0;
  double blend = 1.0;

  std::vector<double> at(double t, Variant v) const {
    if (v == Variant::halves_swapped) return base.at(t < 0.5 ? t + 0.5 : t - 0.5);
    if (v == Variant::impostor && t < 1.0 / 3.0) {
      // Cross-fade back to the target over the last part of the onset.
      const double w = blend * std::clamp((1.0 / 3.0 - t) / 0.1, 0.0, 1.0);
      auto a = onset.at(t);
      const auto b = base.at(t);
      for (std::size_t d = 0; d < a.size(); ++d) a[d] = w * a[d] + (1.0 - w) * b[d];
      return a;
    }
    return base.at(t);
  }
};

FeatureSequence render(const Word& word, Variant variant, double sigma, Xoshiro256& rng) {
  const double stretch = uniform(rng, 0.8, 1.2);
  const auto length = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(word.length * stretch)));
  // Monotone warp u + a sin(pi u) with |a| < 1/pi.
  const double a = uniform(rng, -0.25, 0.25);
  const std::size_t dims = word.base.offset.size();
  std::vector<float> values;
  values.reserve(length * dims);
  for (std::size_t i = 0; i < length; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(length - 1);
    const double t = std::clamp(u + a * std::sin(std::numbers::pi * u), 0.0, 1.0);
    for (double x : word.at(t, variant)) values.push_back(static_cast<float>(x + sigma * normal(rng)));
  }
  return FeatureSequence(length, dims, std::move(values));
}

std::string padded(std::size_t value, int width) {
  std::string s = std::to_string(value);
  return std::string(width > static_cast<int>(s.size()) ? width - s.size() : 0, '0') + s;
}

}  // namespace

Classroom generate_classroom(const ClassroomConfig& cfg) {
  require(cfg.n_classes >= 2, Errc::invalid_argument, "need at least two classes");
  require(cfg.n_impostor_classes <= cfg.n_classes, Errc::invalid_argument, "more impostor classes than classes");
  require(cfg.templates_per_class >= 1, Errc::invalid_argument, "need at least one template per class");
  require(cfg.min_positives >= 1 && cfg.min_positives <= cfg.max_positives, Errc::invalid_argument,
          "need 1 <= min_positives <= max_positives");
  require(cfg.dims >= 1 && cfg.min_length >= 2 && cfg.min_length <= cfg.max_length, Errc::invalid_argument,
          "bad dims or length range");
  require(cfg.impostor_blend >= 0.0 && cfg.impostor_blend <= 1.0, Errc::invalid_argument,
          "impostor_blend must be in [0, 1]");
  require(cfg.misreading_fraction >= 0.0 && cfg.misreading_fraction <= 1.0, Errc::invalid_argument,
          "misreading_fraction must be in [0, 1]");

  Xoshiro256 rng(cfg.seed);
  Classroom room;
  std::vector<Word> words(cfg.n_classes);
  std::vector<double> sigma(cfg.n_classes);
  for (std::size_t c = 0; c < cfg.n_classes; ++c) {
    room.classes.push_back("word" + padded(c, 2));
    words[c].base = random_trajectory(cfg.dims, rng);
    words[c].onset = random_trajectory(cfg.dims, rng);
    words[c].blend = cfg.impostor_blend;
    words[c].length = cfg.min_length + static_cast<std::size_t>(rng.below(cfg.max_length - cfg.min_length + 1));
    sigma[c] = cfg.noise_sigma * std::exp(cfg.noise_scale_spread * uniform(rng, -1.0, 1.0));
  }
  // The last n_impostor_classes classes get impostors.
  const std::size_t first_impostor = cfg.n_classes - cfg.n_impostor_classes;
  for (std::size_t c = first_impostor; c < cfg.n_classes; ++c) room.impostor_classes.push_back(room.classes[c]);

  auto add = [&](std::string id, std::size_t cls, Role role, Label label, std::string speaker, FeatureSequence f) {
    ManifestEntry e{std::move(id), room.classes[cls], {}, role, label, std::move(speaker)};
    room.recordings.push_back({std::move(e), std::move(f)});
  };

  for (std::size_t c = 0; c < cfg.n_classes; ++c) {
    for (std::size_t k = 0; k < cfg.templates_per_class; ++k) {
      add("tpl-" + room.classes[c] + "-" + padded(k, 2), c, Role::template_, Label::positive,
          "adult" + padded(k % 5, 2), render(words[c], Variant::plain, sigma[c], rng));
    }
  }
  for (Role role : {Role::dev, Role::test}) {
    const std::string split(to_string(role));
    for (std::size_t c = 0; c < cfg.n_classes; ++c) {
      const std::size_t n_pos =
          cfg.min_positives + static_cast<std::size_t>(rng.below(cfg.max_positives - cfg.min_positives + 1));
      for (std::size_t k = 0; k < n_pos; ++k) {
        add(split + "-" + room.classes[c] + "-pos" + padded(k, 2), c, role, Label::positive,
            "child" + padded(k % 7, 2), render(words[c], Variant::plain, sigma[c], rng));
      }
      const bool impostor_class = c >= first_impostor;
      for (std::size_t k = 0; k < n_pos; ++k) {
        const std::string speaker = "child" + padded((k + 3) % 7, 2);
        if (impostor_class) {
          add(split + "-" + room.classes[c] + "-imp" + padded(k, 2), c, role, Label::impostor, speaker,
              render(words[c], Variant::impostor, sigma[c], rng));
        } else if (rng.uniform() < cfg.misreading_fraction) {
          add(split + "-" + room.classes[c] + "-neg" + padded(k, 2), c, role, Label::negative, speaker,
              render(words[c], Variant::halves_swapped, sigma[c], rng));
        } else {
          std::size_t other = static_cast<std::size_t>(rng.below(cfg.n_classes - 1));
          if (other >= c) ++other;
          add(split + "-" + room.classes[c] + "-neg" + padded(k, 2), c, role, Label::negative, speaker,
              render(words[other], Variant::plain, sigma[other], rng));
        }
      }
    }
  }
  return room;
}

std::filesystem::path write_classroom(const Classroom& classroom, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "features");
  std::string manifest;
  for (const auto& rec : classroom.recordings) {
    const std::filesystem::path rel = std::filesystem::path("features") / (rec.entry.id + ".fseq");
    write_fseq(rec.features, dir / rel);
    ManifestEntry e = rec.entry;
    e.path = rel;
    manifest += format_manifest_line(e);
    manifest += '\n';
  }
  const auto path = dir / "manifest.jsonl";
  io::write_file_atomic(path, manifest);
  return path;
}

Audio synthesize_tone_word(const std::vector<double>& freqs_hz, double seconds, double pitch_factor,
                           double noise_sigma, std::uint64_t seed) {
  require(!freqs_hz.empty() && seconds > 0.0 && pitch_factor > 0.0, Errc::invalid_argument, "bad tone word");
  constexpr int kRate = 16000;
  Xoshiro256 rng(seed);
  Audio audio;
  audio.sample_rate_hz = kRate;
  audio.channels = 1;
  const auto total = static_cast<std::size_t>(std::lround(seconds * kRate));
  audio.samples.resize(total);
  double phase = 0.0;
  for (std::size_t n = 0; n < total; ++n) {
    const std::size_t seg = std::min(freqs_hz.size() - 1, n * freqs_hz.size() / total);
    phase += 2.0 * std::numbers::pi * freqs_hz[seg] * pitch_factor / kRate;
    audio.samples[n] = static_cast<float>(0.5 * std::sin(phase) + noise_sigma * normal(rng));
  }
  return audio;
}

}  // namespace fsc::synth
