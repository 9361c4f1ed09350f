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

#include <json.hpp>

#include "doctest.h"
#include "fsc/metrics.hpp"
#include "fsc/report.hpp"
#include "tmpdir.hpp"

using fsc::Label;
using fsc::ScoredItem;

TEST_CASE("report json layout") {
  std::vector<ScoredItem> items{{"a1", "a", 0.1, Label::positive, true}, {"a2", "a", 0.9, Label::impostor, false},
                                {"b1", "b", 0.1, Label::positive, true}};
  const auto report = fsc::macro_report(items, 0.5);
  const auto doc = nlohmann::ordered_json::parse(fsc::report_to_json(report));
  CHECK(doc["schema_version"] == 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc["aggregate"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"recall", "precision", "f1", "auc", "balanced_accuracy", "tau", "n_items",
                                         "n_classes_included", "pooling"});
  CHECK(doc["aggregate"]["balanced_accuracy"] == 1.0);
  CHECK(doc["per_class"]["a"]["impostor_auc"] == 1.0);
  CHECK(doc["per_class"]["a"]["n_impostor"] == 1);
  CHECK(doc["per_class"]["b"]["auc"].is_null());
  CHECK(doc["per_class"]["b"]["excluded_reason"] == "no negatives");
  CHECK(doc["excluded"][0]["class"] == "b");
}

TEST_CASE("roc csv and scores") {
  const auto roc = fsc::roc_auc_split(std::vector<double>{0.1}, std::vector<double>{0.2});
  CHECK(fsc::roc_to_csv(roc.curve).rfind("fpr,tpr\n0,0\n", 0) == 0);
  std::vector<ScoredItem> items{{"x", "a", 0.25, Label::negative, std::nullopt}};
  const auto line = nlohmann::json::parse(fsc::scored_items_to_jsonl(items));
  CHECK(line["label"] == "negative");
  CHECK(line["predicted_correct"].is_null());

  testing::TempDir dir;
  std::vector<ScoredItem> two{{"a1", "a", 0.1, Label::positive, true}, {"a2", "a", 0.9, Label::negative, false}};
  fsc::write_roc_dir(fsc::macro_report(two, 0.5), dir / "roc");
  CHECK(std::filesystem::exists(dir / "roc" / "a.csv"));
}
