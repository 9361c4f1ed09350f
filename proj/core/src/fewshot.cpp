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

#include "fsc/fewshot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fsc/align.hpp"
#include "fsc/error.hpp"
#include "fsc/io.hpp"
#include "fsc/log.hpp"
#include "fsc/wav.hpp"

namespace fsc {

std::string_view to_string(Representation r) {
  return r == Representation::continuous ? "continuous" : "discrete";
}

std::string_view to_string(TemplateMode m) {
  return m == TemplateMode::all_templates ? "all-templates" : "barycentre";
}

std::string_view to_string(ScoreReduction r) { return r == ScoreReduction::mean ? "mean" : "min"; }

std::string_view to_string(InputKind k) {
  switch (k) {
    case InputKind::mfcc: return "mfcc";
    case InputKind::continuous_import: return "continuous-import";
    case InputKind::discrete_import: return "discrete-import";
  }
  return "?";
}

TemplateMode parse_template_mode(std::string_view text) {
  if (text == "all-templates") return TemplateMode::all_templates;
  if (text == "barycentre") return TemplateMode::barycentre;
  fail(Errc::unknown_value, "unknown mode '" + std::string(text) + "'");
}

ScoreReduction parse_score_reduction(std::string_view text) {
  if (text == "mean") return ScoreReduction::mean;
  if (text == "min") return ScoreReduction::min;
  fail(Errc::unknown_value, "unknown score reduction '" + std::string(text) + "'");
}

InputKind parse_input_kind(std::string_view text) {
  if (text == "mfcc") return InputKind::mfcc;
  if (text == "continuous-import") return InputKind::continuous_import;
  if (text == "discrete-import") return InputKind::discrete_import;
  fail(Errc::unknown_value, "unknown representation '" + std::string(text) + "'");
}

Representation representation_of(InputKind kind) {
  return kind == InputKind::discrete_import ? Representation::discrete : Representation::continuous;
}

Representation representation_of(const Sequence& seq) {
  return std::holds_alternative<FeatureSequence>(seq) ? Representation::continuous : Representation::discrete;
}

ClassModel::ClassModel(std::string word_class, Representation rep, TemplateMode mode, std::vector<Sequence> refs)
    : word_class_(std::move(word_class)), representation_(rep), mode_(mode), references_(std::move(refs)) {}

ClassModel ClassModel::from_templates(std::string word_class, std::vector<Sequence> templates, TemplateMode mode,
                                      const DbaConfig& dba_cfg, const EdbConfig& edb_cfg) {
  require(!templates.empty(), Errc::missing_template, "class '" + word_class + "' has no templates");
  const Representation rep = representation_of(templates.front());
  for (const auto& t : templates) {
    require(representation_of(t) == rep, Errc::representation_mismatch,
            "class '" + word_class + "' mixes continuous and discrete templates");
  }
  if (mode == TemplateMode::all_templates) {
    return ClassModel(std::move(word_class), rep, mode, std::move(templates));
  }
  std::vector<Sequence> refs;
  if (rep == Representation::continuous) {
    std::vector<FeatureSequence> seqs;
    for (auto& t : templates) seqs.push_back(std::get<FeatureSequence>(std::move(t)));
    refs.emplace_back(dba(seqs, dba_cfg).barycentre);
  } else {
    std::vector<CodeSequence> seqs;
    for (auto& t : templates) seqs.push_back(std::get<CodeSequence>(std::move(t)));
    refs.emplace_back(edb(seqs, edb_cfg).median);
  }
  return ClassModel(std::move(word_class), rep, mode, std::move(refs));
}

double sequence_distance(const Sequence& a, const Sequence& b) {
  if (const auto* fa = std::get_if<FeatureSequence>(&a)) {
    const auto* fb = std::get_if<FeatureSequence>(&b);
    require(fb != nullptr, Errc::representation_mismatch, "cannot compare continuous and discrete sequences");
    return dtw(*fa, *fb).normalized_cost;
  }
  const auto* cb = std::get_if<CodeSequence>(&b);
  require(cb != nullptr, Errc::representation_mismatch, "cannot compare discrete and continuous sequences");
  return ned(std::get<CodeSequence>(a), *cb);
}

double score(const Sequence& input, const ClassModel& model, ScoreReduction reduction) {
  require(representation_of(input) == model.representation(), Errc::representation_mismatch,
          "input is " + std::string(to_string(representation_of(input))) + " but model '" + model.word_class() +
              "' is " + std::string(to_string(model.representation())));
  const auto& refs = model.references();
  if (reduction == ScoreReduction::min) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : refs) best = std::min(best, sequence_distance(input, r));
    return best;
  }
  double sum = 0.0;
  for (const auto& r : refs) sum += sequence_distance(input, r);
  return sum / static_cast<double>(refs.size());
}

void apply_threshold(std::vector<ScoredItem>& items, double tau) {
  for (auto& item : items) item.predicted_correct = classify(item.score, tau);
}

std::vector<double> candidate_thresholds(std::span<const ScoredItem> items) {
  require(!items.empty(), Errc::empty_input, "no scored items");
  std::vector<double> scores;
  scores.reserve(items.size());
  for (const auto& item : items) {
    require(std::isfinite(item.score), Errc::non_finite, "item '" + item.item_id + "' has a non-finite score");
    scores.push_back(item.score);
  }
  std::sort(scores.begin(), scores.end());
  scores.erase(std::unique(scores.begin(), scores.end()), scores.end());
  const double eps = 1e-9 * std::max(1.0, std::abs(scores.back()));
  std::vector<double> out;
  out.reserve(scores.size() + 1);
  out.push_back(scores.front() - eps);
  for (std::size_t i = 1; i < scores.size(); ++i) out.push_back(0.5 * (scores[i - 1] + scores[i]));
  out.push_back(scores.back() + eps);
  return out;
}

Threshold calibrate(std::span<const ScoredItem> dev, std::string representation) {
  require(!dev.empty(), Errc::empty_input, "empty development split");
  Threshold best{0.0, std::move(representation), -1.0};
  for (double tau : candidate_thresholds(dev)) {
    const auto ba = macro_balanced_accuracy_at(dev, tau);
    require(ba.has_value(), Errc::invalid_argument,
            "no development class has both positive and negative items");
    if (*ba > best.calibration_accuracy) {
      best.tau = tau;
      best.calibration_accuracy = *ba;
    }
  }
  return best;
}

std::map<std::string, Threshold> calibrate_per_class(std::span<const ScoredItem> dev, std::string representation) {
  std::map<std::string, std::vector<ScoredItem>> groups;
  for (const auto& item : dev) groups[item.word_class].push_back(item);
  std::map<std::string, Threshold> out;
  for (const auto& [cls, items] : groups) {
    const bool has_pos = std::any_of(items.begin(), items.end(), [](const auto& i) { return is_positive(i.true_label); });
    const bool has_neg = std::any_of(items.begin(), items.end(), [](const auto& i) { return !is_positive(i.true_label); });
    if (!has_pos || !has_neg) continue;
    out.emplace(cls, calibrate(items, representation));
  }
  return out;
}

SequenceLoader make_loader(InputKind kind, const MfccConfig& mfcc) {
  switch (kind) {
    case InputKind::continuous_import:
      return [](const ManifestEntry& e) -> Sequence { return read_fseq(e.path); };
    case InputKind::discrete_import:
      return [](const ManifestEntry& e) -> Sequence { return read_cseq(e.path); };
    case InputKind::mfcc: {
      auto extractor = std::make_shared<MfccExtractor>(mfcc);
      return [extractor](const ManifestEntry& e) -> Sequence {
        try {
          return extractor->extract(read_wav(e.path));
        } catch (const Error& err) {
          throw err.with_context(e.path.string());
        }
      };
    }
  }
  fail(Errc::invalid_argument, "unknown input kind");
}

std::map<std::string, ClassModel> build_models(const Manifest& manifest, const SequenceLoader& loader,
                                               const ModelOptions& options) {
  const auto classes = manifest.template_classes();
  std::vector<std::optional<ClassModel>> built(classes.size());
  io::parallel_for(classes.size(), options.jobs, [&](std::size_t c) {
    std::vector<Sequence> templates;
    for (const auto* entry : manifest.templates_of(classes[c])) templates.push_back(loader(*entry));
    built[c] = ClassModel::from_templates(classes[c], std::move(templates), options.mode, options.dba, options.edb);
  });
  std::map<std::string, ClassModel> models;
  for (std::size_t c = 0; c < classes.size(); ++c) models.emplace(classes[c], std::move(*built[c]));
  log::info("built " + std::to_string(models.size()) + " class models (" + std::string(to_string(options.mode)) + ")");
  return models;
}

SplitEvaluation evaluate_split(const Manifest& manifest, Role split, const std::map<std::string, ClassModel>& models,
                               std::optional<double> tau, const SequenceLoader& loader, ScoreReduction reduction,
                               unsigned jobs) {
  auto entries = manifest.with_role(split);
  require(!entries.empty(), Errc::empty_input, "split '" + std::string(to_string(split)) + "' has no items");
  std::sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  for (const auto* e : entries) {
    require(models.contains(e->word_class), Errc::missing_template,
            "no model for class '" + e->word_class + "' (item '" + e->id + "')");
  }

  SplitEvaluation out;
  out.items.resize(entries.size());
  io::parallel_for(entries.size(), jobs, [&](std::size_t i) {
    const auto& e = *entries[i];
    ScoredItem item;
    item.item_id = e.id;
    item.word_class = e.word_class;
    item.true_label = e.label;
    item.score = score(loader(e), models.at(e.word_class), reduction);
    out.items[i] = std::move(item);
  });
  log::info("scored " + std::to_string(out.items.size()) + " " + std::string(to_string(split)) + " items");
  if (tau) {
    apply_threshold(out.items, *tau);
    out.report = macro_report(out.items, tau);
    for (const auto& [cls, reason] : out.report->excluded) {
      log::warn("class '" + cls + "' excluded from macro averages: " + reason);
    }
  }
  return out;
}

}  // namespace fsc
