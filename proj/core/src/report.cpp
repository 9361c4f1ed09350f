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

#include "fsc/report.hpp"

#include <sstream>

#include <json.hpp>

#include "fsc/io.hpp"

namespace fsc {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string report_to_json(const EvaluationReport& report, int indent) {
  Json doc;
  doc["schema_version"] = 1;
  const auto& agg = report.aggregate;
  // Column order follows the usual results table: Rec., Prec., F1, AUC, Acc.
  doc["aggregate"] = {
      {"recall", agg.micro_recall},
      {"precision", agg.micro_precision},
      {"f1", agg.micro_f1},
      {"auc", agg.macro_auc},
      {"balanced_accuracy", agg.macro_balanced_accuracy},
      {"tau", optional_number(agg.tau)},
      {"n_items", agg.n_items},
      {"n_classes_included", agg.n_classes_included},
      {"pooling", {{"recall", "micro"}, {"precision", "micro"}, {"f1", "micro"}, {"auc", "macro"},
                   {"balanced_accuracy", "macro"}}},
  };
  Json classes = Json::object();
  for (const auto& [name, m] : report.per_class) {
    classes[name] = {
        {"recall", m.recall},
        {"precision", m.precision},
        {"f1", m.f1},
        {"auc", optional_number(m.auc)},
        {"balanced_accuracy", optional_number(m.balanced_accuracy)},
        {"impostor_auc", optional_number(m.impostor_auc)},
        {"tp", m.counts.tp},
        {"fp", m.counts.fp},
        {"tn", m.counts.tn},
        {"fn", m.counts.fn},
        {"n_pos", m.n_pos},
        {"n_neg", m.n_neg},
        {"n_impostor", m.n_impostor},
        {"excluded_reason", m.excluded_reason ? Json(*m.excluded_reason) : Json(nullptr)},
    };
  }
  doc["per_class"] = std::move(classes);
  Json excluded = Json::array();
  for (const auto& [name, reason] : report.excluded) excluded.push_back({{"class", name}, {"reason", reason}});
  doc["excluded"] = std::move(excluded);
  return doc.dump(indent) + "\n";
}

std::string roc_to_csv(const RocCurve& curve) {
  std::ostringstream out;
  out.precision(17);
  out << "fpr,tpr\n";
  for (const auto& p : curve.points) out << p.fpr << ',' << p.tpr << '\n';
  return out.str();
}

std::string scored_items_to_jsonl(const std::vector<ScoredItem>& items) {
  std::string out;
  for (const auto& item : items) {
    Json line = {
        {"id", item.item_id},
        {"class", item.word_class},
        {"score", item.score},
        {"label", std::string(to_string(item.true_label))},
        {"predicted_correct", item.predicted_correct ? Json(*item.predicted_correct) : Json(nullptr)},
    };
    out += line.dump();
    out += '\n';
  }
  return out;
}

void write_roc_dir(const EvaluationReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, m] : report.per_class) {
    if (m.excluded_reason) continue;
    io::write_file_atomic(dir / (name + ".csv"), roc_to_csv(m.roc));
  }
}

}  // namespace fsc
