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

#ifndef FSC_FEWSHOT_HPP
#define FSC_FEWSHOT_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsc/barycentre.hpp"
#include "fsc/manifest.hpp"
#include "fsc/metrics.hpp"
#include "fsc/mfcc.hpp"
#include "fsc/seqdata.hpp"

namespace fsc {

enum class Representation { continuous, discrete };
enum class TemplateMode { all_templates, barycentre };
enum class ScoreReduction { mean, min };

// How item files are turned into sequences.
enum class InputKind { mfcc, continuous_import, discrete_import };

std::string_view to_string(Representation r);
std::string_view to_string(TemplateMode m);
std::string_view to_string(ScoreReduction r);
std::string_view to_string(InputKind k);
TemplateMode parse_template_mode(std::string_view text);
ScoreReduction parse_score_reduction(std::string_view text);
InputKind parse_input_kind(std::string_view text);
Representation representation_of(InputKind kind);
Representation representation_of(const Sequence& seq);

/// Reference data for one word class: either every template, or a single
/// barycentre (DBA for continuous, EDB for discrete sequences).
class ClassModel {
 public:
  static ClassModel from_templates(std::string word_class, std::vector<Sequence> templates, TemplateMode mode,
                                   const DbaConfig& dba_cfg = {}, const EdbConfig& edb_cfg = {});

  const std::string& word_class() const noexcept { return word_class_; }
  Representation representation() const noexcept { return representation_; }
  TemplateMode mode() const noexcept { return mode_; }
  const std::vector<Sequence>& references() const noexcept { return references_; }

 private:
  ClassModel(std::string word_class, Representation rep, TemplateMode mode, std::vector<Sequence> refs);

  std::string word_class_;
  Representation representation_;
  TemplateMode mode_;
  std::vector<Sequence> references_;
};

// Path-normalised DTW cost for feature sequences, NED for code sequences.
double sequence_distance(const Sequence& a, const Sequence& b);

/// Mean (or min) distance from `input` to the model's references.
double score(const Sequence& input, const ClassModel& model, ScoreReduction reduction = ScoreReduction::mean);

// Correct iff score < tau; a tie predicts incorrect.
inline bool classify(double score, double tau) { return score < tau; }

void apply_threshold(std::vector<ScoredItem>& items, double tau);

struct Threshold {
  double tau = 0.0;
  std::string representation;
  double calibration_accuracy = 0.0;
};

/// Midpoints between consecutive distinct sorted scores, plus min - eps and
/// max + eps with eps = 1e-9 * max(1, |max|), ascending.
std::vector<double> candidate_thresholds(std::span<const ScoredItem> items);

/// Single global threshold maximising macro balanced accuracy over the
/// classes that have both labels. Ties resolve to the smallest tau.
Threshold calibrate(std::span<const ScoredItem> dev, std::string representation = {});

/// Diagnostic only: an independent threshold per class, each chosen the same
/// way as `calibrate`. Classes lacking a label are skipped.
std::map<std::string, Threshold> calibrate_per_class(std::span<const ScoredItem> dev, std::string representation = {});

using SequenceLoader = std::function<Sequence(const ManifestEntry&)>;

SequenceLoader make_loader(InputKind kind, const MfccConfig& mfcc = {});

struct ModelOptions {
  TemplateMode mode = TemplateMode::all_templates;
  DbaConfig dba;
  EdbConfig edb;
  unsigned jobs = 1;
};

// One model per template class in the manifest.
std::map<std::string, ClassModel> build_models(const Manifest& manifest, const SequenceLoader& loader,
                                               const ModelOptions& options = {});

struct SplitEvaluation {
  std::vector<ScoredItem> items;  // sorted by item id
  std::optional<EvaluationReport> report;
};

/// Scores every `split` item against the model of the class it was
/// presented as (negatives and impostors included). With a threshold the
/// predictions and the report are filled in.
SplitEvaluation evaluate_split(const Manifest& manifest, Role split, const std::map<std::string, ClassModel>& models,
                               std::optional<double> tau, const SequenceLoader& loader,
                               ScoreReduction reduction = ScoreReduction::mean, unsigned jobs = 1);

}  // namespace fsc

#endif  // FSC_FEWSHOT_HPP
