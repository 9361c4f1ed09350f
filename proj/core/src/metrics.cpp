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

#include "fsc/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "fsc/error.hpp"

namespace fsc {

ConfusionCounts confusion(std::span<const ScoredItem> items) {
  ConfusionCounts c;
  for (const auto& item : items) {
    require(item.predicted_correct.has_value(), Errc::invalid_argument,
            "item '" + item.item_id + "' has no prediction");
    const bool pos = is_positive(item.true_label);
    const bool pred = *item.predicted_correct;
    if (pos && pred) ++c.tp;
    else if (pos) ++c.fn;
    else if (pred) ++c.fp;
    else ++c.tn;
  }
  return c;
}

double precision(const ConfusionCounts& c) {
  return c.tp + c.fp == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

double recall(const ConfusionCounts& c) {
  return c.tp + c.fn == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

double f1(const ConfusionCounts& c) {
  const double p = precision(c);
  const double r = recall(c);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

bool balanced_accuracy_defined(const ConfusionCounts& c) { return c.tp + c.fn > 0 && c.tn + c.fp > 0; }

double balanced_accuracy(const ConfusionCounts& c) {
  require(balanced_accuracy_defined(c), Errc::invalid_argument,
          "balanced accuracy needs at least one positive and one negative");
  const double tpr = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double tnr = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  return 0.5 * (tpr + tnr);
}

RocResult roc_auc(std::span<const double> scores, std::span<const Label> labels) {
  require(scores.size() == labels.size(), Errc::dimension_mismatch, "scores and labels differ in length");
  std::vector<char> positive(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) positive[i] = is_positive(labels[i]) ? 1 : 0;
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  const auto n_pos = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), 1));
  const std::size_t n_neg = scores.size() - n_pos;
  require(n_pos > 0 && n_neg > 0, Errc::invalid_argument, "ROC needs at least one positive and one negative");

  RocResult result;
  result.curve.points.push_back({0.0, 0.0});
  // Mann-Whitney: walking in ascending score order, each positive beats every
  // negative not yet passed; ties within a score group earn half credit.
  double wins = 0.0;
  std::size_t pos_seen = 0;
  std::size_t neg_seen = 0;
  for (std::size_t g = 0; g < order.size();) {
    std::size_t end = g;
    std::size_t group_pos = 0;
    std::size_t group_neg = 0;
    while (end < order.size() && scores[order[end]] == scores[order[g]]) {
      if (positive[order[end]]) ++group_pos;
      else ++group_neg;
      ++end;
    }
    wins += static_cast<double>(group_pos) *
            (static_cast<double>(n_neg - neg_seen - group_neg) + 0.5 * static_cast<double>(group_neg));
    pos_seen += group_pos;
    neg_seen += group_neg;
    result.curve.points.push_back(
        {static_cast<double>(neg_seen) / static_cast<double>(n_neg), static_cast<double>(pos_seen) / static_cast<double>(n_pos)});
    g = end;
  }
  result.auc = wins / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
  return result;
}

RocResult roc_auc_split(std::span<const double> positive_scores, std::span<const double> negative_scores) {
  std::vector<double> scores(positive_scores.begin(), positive_scores.end());
  scores.insert(scores.end(), negative_scores.begin(), negative_scores.end());
  std::vector<Label> labels(positive_scores.size(), Label::positive);
  labels.resize(scores.size(), Label::negative);
  return roc_auc(scores, labels);
}

double trapezoid_area(const RocCurve& curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1];
    const auto& b = curve.points[i];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
  }
  return area;
}

namespace {

std::map<std::string, std::vector<const ScoredItem*>> group_by_class(std::span<const ScoredItem> items) {
  std::map<std::string, std::vector<const ScoredItem*>> groups;
  for (const auto& item : items) groups[item.word_class].push_back(&item);
  return groups;
}

// AUC of positives against impostors alone.
std::optional<double> impostor_auc(const std::vector<const ScoredItem*>& items) {
  std::vector<double> pos;
  std::vector<double> imp;
  for (const auto* item : items) {
    if (is_positive(item->true_label)) pos.push_back(item->score);
    else if (item->true_label == Label::impostor) imp.push_back(item->score);
  }
  if (pos.empty() || imp.empty()) return std::nullopt;
  return roc_auc_split(pos, imp).auc;
}

}  // namespace

EvaluationReport macro_report(std::span<const ScoredItem> items, std::optional<double> tau) {
  require(!items.empty(), Errc::empty_input, "no scored items");
  EvaluationReport report;
  double ba_sum = 0.0;
  double auc_sum = 0.0;
  std::size_t included = 0;

  for (const auto& [cls, group] : group_by_class(items)) {
    ClassMetrics m;
    std::vector<ScoredItem> copies;
    copies.reserve(group.size());
    for (const auto* item : group) copies.push_back(*item);
    m.counts = confusion(copies);
    m.precision = precision(m.counts);
    m.recall = recall(m.counts);
    m.f1 = f1(m.counts);
    for (const auto* item : group) {
      if (is_positive(item->true_label)) ++m.n_pos;
      else ++m.n_neg;
      if (item->true_label == Label::impostor) ++m.n_impostor;
    }
    if (m.n_pos == 0) m.excluded_reason = "no positives";
    else if (m.n_neg == 0) m.excluded_reason = "no negatives";

    if (!m.excluded_reason) {
      m.balanced_accuracy = balanced_accuracy(m.counts);
      std::vector<double> scores;
      std::vector<Label> labels;
      for (const auto* item : group) {
        scores.push_back(item->score);
        labels.push_back(item->true_label);
      }
      auto roc = roc_auc(scores, labels);
      m.auc = roc.auc;
      m.roc = std::move(roc.curve);
      if (m.n_impostor > 0) m.impostor_auc = impostor_auc(group);
      ba_sum += *m.balanced_accuracy;
      auc_sum += *m.auc;
      ++included;
    } else {
      report.excluded.emplace_back(cls, *m.excluded_reason);
    }
    report.per_class.emplace(cls, std::move(m));
  }
  require(included > 0, Errc::invalid_argument, "no class has both positive and negative items");

  const ConfusionCounts pooled = confusion(items);
  report.aggregate.micro_precision = precision(pooled);
  report.aggregate.micro_recall = recall(pooled);
  report.aggregate.micro_f1 = f1(pooled);
  report.aggregate.macro_balanced_accuracy = ba_sum / static_cast<double>(included);
  report.aggregate.macro_auc = auc_sum / static_cast<double>(included);
  report.aggregate.tau = tau;
  report.aggregate.n_items = items.size();
  report.aggregate.n_classes_included = included;
  return report;
}

std::optional<double> macro_balanced_accuracy_at(std::span<const ScoredItem> items, double tau) {
  std::map<std::string, ConfusionCounts> per_class;
  for (const auto& item : items) {
    auto& c = per_class[item.word_class];
    const bool pred = item.score < tau;
    if (is_positive(item.true_label)) (pred ? c.tp : c.fn)++;
    else (pred ? c.fp : c.tn)++;
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [cls, c] : per_class) {
    if (!balanced_accuracy_defined(c)) continue;
    sum += balanced_accuracy(c);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace fsc
