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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>

#include "fsc/align.hpp"
#include "fsc/barycentre.hpp"
#include "fsc/baseline.hpp"
#include "fsc/fewshot.hpp"
#include "fsc/kmeans.hpp"
#include "fsc/metrics.hpp"
#include "fsc/pooling.hpp"
#include "fsc/synthetic.hpp"
#include "oracles.hpp"
#include "tmpdir.hpp"

namespace {

using Codes = std::vector<std::uint32_t>;
using fsc::CodeSequence;
using fsc::FeatureSequence;
using fsc::Label;
using fsc::ScoredItem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    std::string d = info_;
    if (failures_ > 0) d += (d.empty() ? "" : "; ") + std::to_string(failures_) + " violation(s): " + notes_;
    return {failures_ == 0, d};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
  std::string info_;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

// ----------------------------------------------------------------------------

Outcome dtw_oracle() {
  Checker c;
  oracle::Rng rng(101);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = rng.between(1, 3);
    const auto a = oracle::random_features(rng, rng.between(1, 5), d);
    const auto b = oracle::random_features(rng, rng.between(1, 5), d);
    const double err = std::abs(fsc::dtw(a, b).raw_cost - static_cast<double>(oracle::brute_force_dtw(a, b).cost));
    worst = std::max(worst, err);
    c.expect(err <= 1e-9, "pair " + std::to_string(i) + " differs by " + fmt(err));
  }
  c.note("500 pairs, max |diff| " + fmt(worst, 3));
  return c.outcome();
}

Outcome edit_distance_oracle() {
  Checker c;
  std::vector<Codes> all;
  std::function<void(Codes&)> grow = [&](Codes& s) {
    if (!s.empty()) all.push_back(s);
    if (s.size() == 4) return;
    for (std::uint32_t k = 0; k < 3; ++k) {
      s.push_back(k);
      grow(s);
      s.pop_back();
    }
  };
  Codes seed;
  grow(seed);
  std::size_t pairs = 0;
  auto check = [&](const Codes& a, const Codes& b) {
    ++pairs;
    c.expect(fsc::edit_distance(a, b) == oracle::levenshtein(a, b), "edit distance mismatch");
    const double n = fsc::ned(a, b);
    c.expect(n >= 0.0 && n <= 1.0, "NED outside [0,1]");
  };
  for (const auto& a : all) {
    for (const auto& b : all) check(a, b);
  }
  oracle::Rng rng(202);
  for (int i = 0; i < 1000; ++i) {
    const auto k = static_cast<std::uint32_t>(rng.between(2, 6));
    check(oracle::random_codes(rng, rng.between(1, 8), k), oracle::random_codes(rng, rng.between(1, 8), k));
  }
  c.note(std::to_string(pairs) + " pairs");
  return c.outcome();
}

Outcome dba_monotone() {
  Checker c;
  oracle::Rng rng(303);
  std::size_t iterations = 0, rejected = 0;
  for (int s = 0; s < 200; ++s) {
    const std::size_t d = rng.between(1, 4);
    std::vector<FeatureSequence> set;
    for (std::size_t i = 0, n = rng.between(3, 15); i < n; ++i) set.push_back(oracle::random_features(rng, rng.between(1, 10), d));
    const auto r = fsc::dba(set, {.max_iters = 10, .rel_tolerance = 0.0});
    double prev = r.initial_cost;
    for (double cost : r.cost_trace) {
      c.expect(cost <= prev, "set " + std::to_string(s) + " cost rose " + fmt(prev, 12) + " -> " + fmt(cost, 12));
      prev = cost;
    }
    const double recomputed = fsc::total_dtw_cost(r.barycentre, set);
    c.expect(std::abs(recomputed - prev) <= 1e-9 * std::max(1.0, prev), "reported cost disagrees with recomputation");
    iterations += r.iterations;
    rejected += r.stopped_on_increase ? 1 : 0;
  }
  for (int s = 0; s < 20; ++s) {
    const auto t = oracle::random_features(rng, rng.between(1, 10), rng.between(1, 4));
    const std::vector<FeatureSequence> same(rng.between(3, 15), t);
    c.expect(fsc::dba(same).barycentre == t, "identical templates not returned exactly");
  }
  c.note("200 sets, " + std::to_string(iterations) + " accepted updates, " + std::to_string(rejected) +
         " stopped on a rejected update");
  return c.outcome();
}

bool is_local_optimum(const Codes& s, const std::vector<Codes>& set, std::uint32_t k) {
  const double here = oracle::total_ned(s, set);
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s.size() > 1) {
      auto del = s;
      del.erase(del.begin() + static_cast<std::ptrdiff_t>(i));
      if (oracle::total_ned(del, set) < here - 1e-12) return false;
    }
    for (std::uint32_t x = 0; x < k; ++x) {
      auto ins = s;
      ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(i), x);
      if (oracle::total_ned(ins, set) < here - 1e-12) return false;
      if (i < s.size()) {
        auto sub = s;
        sub[i] = x;
        if (oracle::total_ned(sub, set) < here - 1e-12) return false;
      }
    }
  }
  return true;
}

Outcome edb_toy() {
  Checker c;
  oracle::Rng rng(404);
  int global = 0;
  for (int s = 0; s < 50; ++s) {
    std::vector<CodeSequence> set;
    std::vector<Codes> raw;
    std::size_t longest = 0;
    for (int i = 0; i < 3; ++i) {
      raw.push_back(oracle::random_codes(rng, rng.between(1, 4), 2));
      set.emplace_back(raw.back(), 2);
      longest = std::max(longest, raw.back().size());
    }
    const auto r = fsc::edb(set);
    const double final_obj = r.objective_trace.back();
    c.expect(final_obj <= r.initial_objective, "worse than start");
    double prev = r.initial_objective;
    for (std::size_t i = 0; i < r.accepted_moves; ++i) {
      c.expect(r.objective_trace[i] < prev, "accepted move did not strictly decrease");
      prev = r.objective_trace[i];
    }
    const Codes med(r.median.codes().begin(), r.median.codes().end());
    c.expect(std::abs(oracle::total_ned(med, raw) - final_obj) < 1e-12, "objective does not match result");
    const double best = oracle::brute_force_median(raw, 2, longest + 1);
    c.expect(best <= final_obj + 1e-12, "brute force worse than local search");
    if (final_obj <= best + 1e-12) ++global;
    else c.expect(is_local_optimum(med, raw, 2), "non-global result is not a local optimum");
  }
  c.expect(global >= 40, "global optimum reached in only " + std::to_string(global) + "/50");
  c.note("global optimum in " + std::to_string(global) + "/50");
  return c.outcome();
}

Outcome kmeans_properties() {
  Checker c;
  oracle::Rng rng(505);
  double worst_mean = 0;
  for (int p = 0; p < 100; ++p) {
    const std::size_t d = rng.between(1, 6);
    std::vector<FeatureSequence> data;
    for (std::size_t i = 0, n = rng.between(1, 5); i < n; ++i) data.push_back(oracle::random_features(rng, rng.between(10, 60), d));
    std::size_t frames = 0;
    for (const auto& s : data) frames += s.length();
    const auto k = rng.between(2, std::min<std::size_t>(12, frames));
    const auto r = fsc::train_codebook(data, {.k = k, .max_iters = 50, .tolerance = 0.0, .seed = static_cast<std::uint64_t>(p)});
    for (std::size_t i = 1; i < r.inertia_trace.size(); ++i) {
      c.expect(r.inertia_trace[i] <= r.inertia_trace[i - 1], "inertia rose in problem " + std::to_string(p));
    }
    const auto one = fsc::train_codebook(data, {.k = 1, .max_iters = 5, .tolerance = 0.0, .seed = 0});
    for (std::size_t j = 0; j < d; ++j) {
      double sum = 0;
      for (const auto& s : data) {
        for (std::size_t t = 0; t < s.length(); ++t) sum += s.frame(t)[j];
      }
      const double err = std::abs(one.codebook.centroid(0)[j] - sum / static_cast<double>(frames));
      worst_mean = std::max(worst_mean, err);
      c.expect(err <= 1e-6, "k=1 centroid off by " + fmt(err));
    }
  }
  c.note("100 problems, k=1 max |err| " + fmt(worst_mean, 3));
  return c.outcome();
}

Outcome metrics_properties() {
  Checker c;
  oracle::Rng rng(606);
  for (int i = 0; i < 1000; ++i) {
    const fsc::ConfusionCounts cc{rng.between(0, 100), rng.between(0, 100), rng.between(1, 100), rng.between(1, 100)};
    const double tpr = static_cast<double>(cc.tp) / static_cast<double>(cc.tp + cc.fn);
    const double tnr = static_cast<double>(cc.tn) / static_cast<double>(cc.tn + cc.fp);
    c.expect(std::abs(fsc::balanced_accuracy(cc) - 0.5 * (tpr + tnr)) < 1e-15, "balanced accuracy formula");
  }
  double worst = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<double> pos(rng.between(1, 30)), neg(rng.between(1, 30));
    std::set<double> used;
    for (auto* v : {&pos, &neg}) {
      for (auto& x : *v) {
        do x = rng.uniform(); while (!used.insert(x).second);
      }
    }
    const auto r = fsc::roc_auc_split(pos, neg);
    const double err = std::abs(r.auc - fsc::trapezoid_area(r.curve));
    worst = std::max(worst, err);
    c.expect(err <= 1e-12, "Mann-Whitney vs trapezoid differ by " + fmt(err));
    c.expect(std::abs(r.auc - oracle::pair_count_auc(pos, neg)) <= 1e-12, "AUC vs pair count");
  }
  c.expect(fsc::roc_auc_split(std::vector<double>{0.1, 0.2, 0.3}, std::vector<double>{0.4, 0.5}).auc == 1.0,
           "separated AUC != 1");
  c.expect(fsc::roc_auc_split(std::vector<double>(4, 0.7), std::vector<double>(5, 0.7)).auc == 0.5, "tied AUC != 0.5");
  c.note("1000 BA counts, 300 tie-free AUC sets, max |MW - trapezoid| " + fmt(worst, 3));
  return c.outcome();
}

double grid_macro_ba(const std::vector<ScoredItem>& items, double tau) {
  std::map<std::string, std::array<double, 4>> k;  // tp fn tn fp
  for (const auto& it : items) {
    const bool yes = it.score < tau;
    auto& x = k[it.word_class];
    if (fsc::is_positive(it.true_label)) x[yes ? 0 : 1] += 1;
    else x[yes ? 3 : 2] += 1;
  }
  double s = 0;
  int n = 0;
  for (const auto& [cls, x] : k) {
    if (x[0] + x[1] == 0 || x[2] + x[3] == 0) continue;
    s += 0.5 * (x[0] / (x[0] + x[1]) + x[2] / (x[2] + x[3]));
    ++n;
  }
  return s / n;
}

Outcome calibration() {
  Checker c;
  oracle::Rng rng(707);
  std::vector<ScoredItem> sep;
  double max_pos = 0, min_neg = 1;
  for (int i = 0; i < 60; ++i) {
    const bool p = i % 2 == 0;
    const double s = p ? rng.uniform(0.05, 0.35) : rng.uniform(0.55, 0.95);
    (p ? max_pos : min_neg) = p ? std::max(max_pos, s) : std::min(min_neg, s);
    sep.push_back({std::to_string(i), "c" + std::to_string((i / 2) % 4), s, p ? Label::positive : Label::negative, {}});
  }
  const auto t = fsc::calibrate(sep);
  c.expect(t.calibration_accuracy == 1.0, "separable BA " + fmt(t.calibration_accuracy));
  c.expect(t.tau > max_pos && t.tau < min_neg, "tau outside the gap");
  c.note("separable tau " + fmt(t.tau) + " in (" + fmt(max_pos) + ", " + fmt(min_neg) + ")");

  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ScoredItem> dev;
    for (int i = 0; i < 60; ++i) {
      const Label l = rng.uniform() < 0.5 ? Label::positive : (rng.uniform() < 0.3 ? Label::impostor : Label::negative);
      // two decimals keeps every gap wider than the grid spacing
      const double s = (std::round(rng.uniform(0.0, 100.0)) + (fsc::is_positive(l) ? 0.0 : 20.0)) / 100.0;
      dev.push_back({std::to_string(i), "c" + std::to_string(i % 3), s, l, {}});
    }
    const auto r = fsc::calibrate(dev);
    double best = 0;
    for (int g = 0; g < 10000; ++g) best = std::max(best, grid_macro_ba(dev, -0.01 + 1.22 * g / 9999.0));
    worst = std::max(worst, std::abs(best - r.calibration_accuracy));
    c.expect(std::abs(best - r.calibration_accuracy) <= 1e-12, "grid optimum " + fmt(best, 15) + " vs " + fmt(r.calibration_accuracy, 15));
    c.expect(std::abs(grid_macro_ba(dev, r.tau) - r.calibration_accuracy) <= 1e-12, "returned tau does not give reported BA");
  }
  c.note("20 random dev sets, max |calibrate - grid| " + fmt(worst, 3));
  return c.outcome();
}

struct PipelineResult {
  fsc::EvaluationReport report;
  double tau;
  std::vector<ScoredItem> dev;
  std::vector<ScoredItem> test;
};

PipelineResult run_pipeline(const fsc::synth::ClassroomConfig& cfg) {
  testing::TempDir dir;
  const auto manifest = fsc::load_manifest(fsc::synth::write_classroom(fsc::synth::generate_classroom(cfg), dir.path()));
  const auto loader = fsc::make_loader(fsc::InputKind::continuous_import);
  const auto models = fsc::build_models(manifest, loader, {.mode = fsc::TemplateMode::all_templates, .dba = {}, .edb = {}, .jobs = 4});
  auto dev = fsc::evaluate_split(manifest, fsc::Role::dev, models, std::nullopt, loader, fsc::ScoreReduction::mean, 4);
  const double tau = fsc::calibrate(dev.items).tau;
  auto test = fsc::evaluate_split(manifest, fsc::Role::test, models, tau, loader, fsc::ScoreReduction::mean, 4);
  return {*test.report, tau, dev.items, test.items};
}

Outcome classroom() {
  Checker c;
  double min_ba = 1.0;
  std::string orderings;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    fsc::synth::ClassroomConfig cfg;
    cfg.seed = seed;
    const auto clean = run_pipeline(cfg);
    c.expect(clean.report.per_class.size() == 16, "expected 16 classes");
    std::size_t with_impostors = 0;
    for (const auto& [cls, m] : clean.report.per_class) with_impostors += m.n_impostor > 0 ? 1 : 0;
    c.expect(with_impostors == 3, "expected 3 impostor classes");
    const double ba = clean.report.aggregate.macro_balanced_accuracy;
    min_ba = std::min(min_ba, ba);
    c.expect(ba >= 0.95, "seed " + std::to_string(seed) + " macro BA " + fmt(ba));

    cfg.noise_sigma = 1.0;
    const auto noisy = run_pipeline(cfg);
    double imp = 0, rest = 0;
    int n_imp = 0, n_rest = 0;
    for (const auto& [cls, m] : noisy.report.per_class) {
      if (!m.auc) continue;
      if (m.n_impostor > 0) imp += *m.auc, ++n_imp;
      else rest += *m.auc, ++n_rest;
    }
    imp /= n_imp;
    rest /= n_rest;
    c.expect(imp < rest, "seed " + std::to_string(seed) + " impostor AUC " + fmt(imp) + " >= " + fmt(rest));
    orderings += (orderings.empty() ? "" : " ") + fmt(imp, 3) + "<" + fmt(rest, 3);
  }
  c.note("sigma 0.05 min macro BA " + fmt(min_ba) + "; sigma 1.0 mean AUC impostor<other per seed: " + orderings);
  return c.outcome();
}

Outcome baseline_failure_mode() {
  Checker c;
  fsc::synth::ClassroomConfig cfg;
  cfg.misreading_fraction = 1.0;
  cfg.n_impostor_classes = 0;
  const auto room = fsc::synth::generate_classroom(cfg);
  std::vector<fsc::LabelledVector> train;
  for (const auto& r : room.recordings) {
    if (r.entry.role == fsc::Role::template_) train.push_back({fsc::mean_pool(r.features), r.entry.word_class});
  }
  const auto model = fsc::train_softmax(train, {}).model;
  std::vector<ScoredItem> items;
  for (const auto& r : room.recordings) {
    if (r.entry.role != fsc::Role::test) continue;
    const auto a = fsc::assess(model, fsc::mean_pool(r.features), r.entry.word_class);
    items.push_back({r.entry.id, r.entry.word_class, a.score, r.entry.label, a.predicted_correct});
  }
  const auto report = fsc::macro_report(items, std::nullopt);
  const auto& agg = report.aggregate;
  c.expect(agg.micro_recall == 1.0, "recall " + fmt(agg.micro_recall));
  c.expect(std::abs(agg.macro_balanced_accuracy - 0.5) <= 0.05, "BA " + fmt(agg.macro_balanced_accuracy));
  c.note("recall " + fmt(agg.micro_recall) + ", precision " + fmt(agg.micro_precision) + ", BA " +
         fmt(agg.macro_balanced_accuracy) + ", AUC " + fmt(agg.macro_auc));
  return c.outcome();
}

Outcome gradient_check() {
  Checker c;
  oracle::Rng rng(909);
  double worst = 0;
  const double h = 1e-5;
  for (int point = 0; point < 20; ++point) {
    std::vector<double> w(12), b(3);
    for (auto& v : w) v = rng.normal();
    for (auto& v : b) v = rng.normal();
    fsc::SoftmaxModel model({"a", "b", "c"}, 4, w, b);
    std::vector<fsc::LabelledVector> data;
    for (int i = 0; i < 10; ++i) {
      data.push_back({{rng.normal(), rng.normal(), rng.normal(), rng.normal()}, std::string(1, static_cast<char>('a' + i % 3))});
    }
    const double l2 = rng.uniform(0.0, 0.1);
    const auto g = fsc::softmax_objective(model, data, l2);
    auto probe = [&](double& param, double analytic) {
      const double keep = param;
      param = keep + h;
      const double up = fsc::softmax_objective(model, data, l2).loss;
      param = keep - h;
      const double down = fsc::softmax_objective(model, data, l2).loss;
      param = keep;
      const double numeric = (up - down) / (2 * h);
      const double rel = std::abs(numeric - analytic) / std::max(std::abs(numeric) + std::abs(analytic), 1e-8);
      worst = std::max(worst, rel);
    };
    for (std::size_t i = 0; i < 12; ++i) probe(model.mutable_weights()[i], g.grad_weights[i]);
    for (std::size_t i = 0; i < 3; ++i) probe(model.mutable_bias()[i], g.grad_bias[i]);
  }
  c.expect(worst < 1e-4, "max relative error " + fmt(worst));
  c.note("20 points, max relative error " + fmt(worst, 3));
  return c.outcome();
}

Outcome per_class_thresholds() {
  Checker c;
  std::string summary;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    fsc::synth::ClassroomConfig cfg;
    cfg.seed = seed;
    cfg.noise_scale_spread = 1.5;
    cfg.noise_sigma = 0.3;
    const auto run = run_pipeline(cfg);
    const auto per_class = fsc::calibrate_per_class(run.dev);
    auto items = run.test;
    for (auto& it : items) {
      const auto found = per_class.find(it.word_class);
      it.predicted_correct = fsc::classify(it.score, found != per_class.end() ? found->second.tau : run.tau);
    }
    const double single = run.report.aggregate.macro_balanced_accuracy;
    const double multi = fsc::macro_report(items, std::nullopt).aggregate.macro_balanced_accuracy;
    c.expect(multi >= single, "seed " + std::to_string(seed) + " per-class " + fmt(multi) + " < single " + fmt(single));
    summary += (summary.empty() ? "" : " ") + fmt(multi, 3) + ">=" + fmt(single, 3);
  }
  c.note("per-class vs single BA: " + summary);
  return c.outcome();
}

Outcome round_trips() {
  Checker c;
  testing::TempDir dir;
  oracle::Rng rng(1212);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t t = rng.between(1, 50), d = rng.between(1, 16);
    std::vector<float> v(t * d);
    for (auto& x : v) x = static_cast<float>(rng.normal() * std::pow(10.0, rng.uniform(-6, 6)));
    const std::optional<float> rate = rng.uniform() < 0.5 ? std::optional<float>(50.0F) : std::nullopt;
    const FeatureSequence f(t, d, v, rate);
    fsc::write_fseq(f, dir / "x.fseq");
    const auto g = fsc::read_fseq(dir / "x.fseq");
    c.expect(g.length() == t && g.dims() == d && g.frame_rate_hz() == rate &&
                 std::memcmp(g.values().data(), v.data(), v.size() * sizeof(float)) == 0,
             "fseq " + std::to_string(i));

    const auto k = static_cast<std::uint32_t>(rng.between(1, 1000));
    const CodeSequence cs(oracle::random_codes(rng, rng.between(1, 80), k), k);
    fsc::write_cseq(cs, dir / "x.cseq");
    c.expect(fsc::read_cseq(dir / "x.cseq") == cs, "cseq " + std::to_string(i));
  }
  c.note("1000 .fseq + 1000 .cseq");
  return c.outcome();
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // 0 = no runtime bound
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "DTW equals exhaustive path enumeration", 10, dtw_oracle},
      {2, "edit distance equals naive recursion", 10, edit_distance_oracle},
      {3, "DBA cost is monotone", 0, dba_monotone},
      {4, "EDB optimality at toy scale", 60, edb_toy},
      {5, "k-means inertia and k=1 mean", 0, kmeans_properties},
      {6, "metrics identities", 0, metrics_properties},
      {7, "calibration optimum", 0, calibration},
      {8, "synthetic classroom end to end", 120, classroom},
      {9, "softmax baseline failure mode", 0, baseline_failure_mode},
      {10, "softmax gradient check", 0, gradient_check},
      {11, "per-class vs single threshold", 0, per_class_thresholds},
      {12, "format round trips", 0, round_trips},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && secs >= cr.budget_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + fmt(cr.budget_seconds) + " s";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", cr.number, cr.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
