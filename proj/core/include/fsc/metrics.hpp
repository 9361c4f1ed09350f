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

#ifndef FSC_METRICS_HPP
#define FSC_METRICS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsc/manifest.hpp"

namespace fsc {

/// One evaluated item. `score` is a distance: lower means more likely a
/// correct reading. `predicted_correct` is filled once a threshold is applied.
struct ScoredItem {
  std::string item_id;
  std::string word_class;
  double score = 0.0;
  Label true_label = Label::positive;
  std::optional<bool> predicted_correct;
};

// "Positive" means the word was read correctly.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

ConfusionCounts confusion(std::span<const ScoredItem> items);

// 0/0 conventions: precision = 0 when tp+fp = 0, recall = 0 when tp+fn = 0,
// f1 = 0 when precision+recall = 0.
double precision(const ConfusionCounts& c);
double recall(const ConfusionCounts& c);
double f1(const ConfusionCounts& c);

/// 0.5 * (tp/(tp+fn) + tn/(tn+fp)). Throws when either side is empty; the
/// caller decides whether to exclude such a class.
double balanced_accuracy(const ConfusionCounts& c);
bool balanced_accuracy_defined(const ConfusionCounts& c);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // from (0,0) to (1,1), non-decreasing
};

struct RocResult {
  RocCurve curve;
  double auc = 0.0;
};

/// ROC and Mann-Whitney AUC for distance scores (lower = positive). AUC
/// counts (positive, negative) pairs with pos < neg plus half the ties, over
/// n_pos * n_neg. The curve sweeps thresholds across distinct scores in
/// ascending order, grouping ties into one step.
RocResult roc_auc(std::span<const double> scores, std::span<const Label> labels);
RocResult roc_auc_split(std::span<const double> positive_scores, std::span<const double> negative_scores);

// Area under a piecewise-linear curve.
double trapezoid_area(const RocCurve& curve);

struct ClassMetrics {
  ConfusionCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> balanced_accuracy;
  std::optional<double> auc;
  std::optional<double> impostor_auc;  // positives vs impostors only
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;  // includes impostors
  std::size_t n_impostor = 0;
  std::optional<std::string> excluded_reason;
  RocCurve roc;
};

struct AggregateMetrics {
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  double macro_balanced_accuracy = 0.0;
  double macro_auc = 0.0;
  std::optional<double> tau;
  std::size_t n_items = 0;
  std::size_t n_classes_included = 0;
};

struct EvaluationReport {
  std::map<std::string, ClassMetrics> per_class;
  AggregateMetrics aggregate;
  std::vector<std::pair<std::string, std::string>> excluded;  // class, reason
};

/// Per-class metrics at the given predictions plus macro and micro
/// aggregates. Classes lacking positives or negatives are excluded from
/// macro averages (and listed); micro precision/recall/F1 pool every item.
/// All items must carry predictions.
EvaluationReport macro_report(std::span<const ScoredItem> items, std::optional<double> tau);

/// Macro balanced accuracy over classes that have both labels, predicting
/// correct iff score < tau. Returns nullopt when no class qualifies.
std::optional<double> macro_balanced_accuracy_at(std::span<const ScoredItem> items, double tau);

}  // namespace fsc

#endif  // FSC_METRICS_HPP
