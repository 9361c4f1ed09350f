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

#ifndef FSC_REPORT_HPP
#define FSC_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fsc/metrics.hpp"

namespace fsc {

// Report JSON; the layout is described by docs/report.schema.json.
std::string report_to_json(const EvaluationReport& report, int indent = 2);

std::string roc_to_csv(const RocCurve& curve);

// One JSON object per line, in the given order.
std::string scored_items_to_jsonl(const std::vector<ScoredItem>& items);

// One CSV per included class, named <class>.csv, header "fpr,tpr".
void write_roc_dir(const EvaluationReport& report, const std::filesystem::path& dir);

}  // namespace fsc

#endif  // FSC_REPORT_HPP
