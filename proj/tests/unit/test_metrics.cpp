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

#include "doctest.h"
#include "fsc/error.hpp"
#include "fsc/metrics.hpp"
#include "oracles.hpp"

using fsc::ConfusionCounts;
using fsc::Label;
using fsc::ScoredItem;

namespace {

ScoredItem item(const std::string& cls, double score, Label label, std::optional<bool> pred = std::nullopt) {
  static int n = 0;
  return ScoredItem{"i" + std::to_string(n++), cls, score, label, pred};
}

}  // namespace

TEST_CASE("confusion counts") {
  std::vector<ScoredItem> one{item("a", 0, Label::positive, true)};
  CHECK(fsc::confusion(one) == ConfusionCounts{1, 0, 0, 0});
  one = {item("a", 0, Label::impostor, true)};
  CHECK(fsc::confusion(one) == ConfusionCounts{0, 1, 0, 0});

  // hand tally: pos T,T,F,T ; neg F,T,F ; imp T,F,F
  std::vector<ScoredItem> batch{
      item("a", 0, Label::positive, true),  item("a", 0, Label::positive, true),  item("b", 0, Label::positive, false),
      item("b", 0, Label::positive, true),  item("a", 0, Label::negative, false), item("b", 0, Label::negative, true),
      item("a", 0, Label::negative, false), item("b", 0, Label::impostor, true),  item("a", 0, Label::impostor, false),
      item("b", 0, Label::impostor, false)};
  CHECK(fsc::confusion(batch) == ConfusionCounts{3, 2, 4, 1});

  std::vector<ScoredItem> unassessed{item("a", 0, Label::positive)};
  CHECK_THROWS_AS(fsc::confusion(unassessed), fsc::Error);
}

TEST_CASE("precision recall f1") {
  const ConfusionCounts c{8, 4, 0, 2};
  CHECK(fsc::precision(c) == doctest::Approx(2.0 / 3.0));
  CHECK(fsc::recall(c) == doctest::Approx(0.8));
  CHECK(fsc::f1(c) == doctest::Approx(0.7272727).epsilon(1e-6));
  const ConfusionCounts zero{};
  CHECK(fsc::precision(zero) == 0.0);
  CHECK(fsc::recall(zero) == 0.0);
  CHECK(fsc::f1(zero) == 0.0);
  const ConfusionCounts all_yes{10, 10, 0, 0};
  CHECK(fsc::recall(all_yes) == 1.0);
  CHECK(fsc::precision(all_yes) == 0.5);
  CHECK(fsc::f1(all_yes) == doctest::Approx(2.0 / 3.0));
  CHECK(fsc::balanced_accuracy(all_yes) == 0.5);
}

TEST_CASE("balanced accuracy") {
  CHECK(fsc::balanced_accuracy({8, 4, 6, 2}) == doctest::Approx(0.7));
  CHECK(fsc::balanced_accuracy({5, 0, 5, 0}) == 1.0);
  CHECK_FALSE(fsc::balanced_accuracy_defined({3, 0, 0, 2}));
  CHECK_THROWS_AS(fsc::balanced_accuracy({3, 0, 0, 2}), fsc::Error);
  oracle::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const ConfusionCounts c{rng.between(0, 50), rng.between(0, 50), rng.between(0, 50), rng.between(0, 50)};
    if (c.tp + c.fn == 0 || c.tn + c.fp == 0) continue;
    const double expect = 0.5 * (static_cast<double>(c.tp) / (c.tp + c.fn) + static_cast<double>(c.tn) / (c.tn + c.fp));
    CHECK(fsc::balanced_accuracy(c) == doctest::Approx(expect).epsilon(1e-15));
  }
}

TEST_CASE("auc") {
  CHECK(fsc::roc_auc_split(std::vector<double>{0.1, 0.4}, std::vector<double>{0.3, 0.9}).auc == 0.75);
  CHECK(fsc::roc_auc_split(std::vector<double>{0.1, 0.2}, std::vector<double>{0.3, 0.9}).auc == 1.0);
  CHECK(fsc::roc_auc_split(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5, 0.5}).auc == 0.5);
  CHECK(fsc::roc_auc_split(std::vector<double>{0.9}, std::vector<double>{0.1}).auc == 0.0);
  CHECK_THROWS_AS(fsc::roc_auc_split(std::vector<double>{0.1}, std::vector<double>{}), fsc::Error);

  oracle::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> pos(rng.between(1, 20)), neg(rng.between(1, 20));
    // coarse grid so ties happen
    for (auto& v : pos) v = static_cast<double>(rng.index(8)) / 8.0;
    for (auto& v : neg) v = static_cast<double>(rng.index(8)) / 8.0 + 0.1;
    const auto r = fsc::roc_auc_split(pos, neg);
    CHECK(r.auc == doctest::Approx(oracle::pair_count_auc(pos, neg)).epsilon(1e-12));
    CHECK(fsc::trapezoid_area(r.curve) == doctest::Approx(r.auc).epsilon(1e-12));
    CHECK(r.curve.points.front().fpr == 0.0);
    CHECK(r.curve.points.back().tpr == 1.0);
    for (std::size_t k = 1; k < r.curve.points.size(); ++k) {
      CHECK(r.curve.points[k].fpr >= r.curve.points[k - 1].fpr);
      CHECK(r.curve.points[k].tpr >= r.curve.points[k - 1].tpr);
    }
    std::vector<double> npos, nneg;
    for (double v : pos) npos.push_back(-v);
    for (double v : neg) nneg.push_back(-v);
    CHECK(fsc::roc_auc_split(npos, nneg).auc == doctest::Approx(1.0 - r.auc).epsilon(1e-12));
  }
}

TEST_CASE("macro report") {
  SUBCASE("mean of per-class balanced accuracy") {
    std::vector<ScoredItem> items{item("a", 0.1, Label::positive, true), item("a", 0.9, Label::negative, false),
                                  item("b", 0.1, Label::positive, true), item("b", 0.2, Label::negative, true)};
    const auto r = fsc::macro_report(items, 0.5);
    CHECK(r.per_class.at("a").balanced_accuracy == 1.0);
    CHECK(r.per_class.at("b").balanced_accuracy == 0.5);
    CHECK(r.aggregate.macro_balanced_accuracy == 0.75);
    CHECK(r.aggregate.tau == 0.5);
    CHECK(r.aggregate.n_items == 4);
  }
  SUBCASE("class without negatives is excluded") {
    std::vector<ScoredItem> items{item("a", 0.1, Label::positive, true), item("a", 0.9, Label::negative, false),
                                  item("c", 0.1, Label::positive, true)};
    const auto r = fsc::macro_report(items, std::nullopt);
    REQUIRE(r.excluded.size() == 1);
    CHECK(r.excluded[0] == std::make_pair(std::string("c"), std::string("no negatives")));
    CHECK(r.aggregate.n_classes_included == 1);
    CHECK_FALSE(r.per_class.at("c").balanced_accuracy.has_value());
  }
  SUBCASE("macro auc against independent pair counts") {
    oracle::Rng rng(3);
    std::vector<ScoredItem> items;
    double expected = 0;
    for (const std::string cls : {"x", "y", "z"}) {
      std::vector<double> pos, neg;
      for (int i = 0; i < 12; ++i) {
        const bool p = i % 3 != 0;
        const Label label = p ? Label::positive : (i % 2 ? Label::impostor : Label::negative);
        const double s = rng.uniform() + (p ? 0.0 : 0.3);
        (p ? pos : neg).push_back(s);
        items.push_back(item(cls, s, label, s < 0.6));
      }
      expected += oracle::pair_count_auc(pos, neg) / 3.0;
    }
    const auto r = fsc::macro_report(items, 0.6);
    CHECK(r.aggregate.macro_auc == doctest::Approx(expected).epsilon(1e-12));
    for (const auto& [cls, m] : r.per_class) {
      CHECK(m.impostor_auc.has_value());
      CHECK(m.n_pos + m.n_neg == 12);
    }
  }
  SUBCASE("empty") { CHECK_THROWS_AS(fsc::macro_report({}, std::nullopt), fsc::Error); }
}
