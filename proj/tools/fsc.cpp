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

// fsc: few-shot spoken word checking from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 data or validation error,
// 3 internal invariant failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsc/align.hpp"
#include "fsc/barycentre.hpp"
#include "fsc/baseline.hpp"
#include "fsc/error.hpp"
#include "fsc/fewshot.hpp"
#include "fsc/io.hpp"
#include "fsc/kmeans.hpp"
#include "fsc/log.hpp"
#include "fsc/manifest.hpp"
#include "fsc/metrics.hpp"
#include "fsc/mfcc.hpp"
#include "fsc/pooling.hpp"
#include "fsc/report.hpp"
#include "fsc/seqdata.hpp"
#include "fsc/synthetic.hpp"
#include "fsc/wav.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::vector<fs::path> files_with_extension(const fs::path& dir, const std::string& ext) {
  fsc::require(fs::is_directory(dir), fsc::Errc::missing_file, dir.string() + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  fsc::require(!out.empty(), fsc::Errc::empty_input, "no " + ext + " files in " + dir.string());
  return out;
}

fsc::MfccConfig load_mfcc_config(const std::string& path) {
  fsc::MfccConfig cfg;
  if (path.empty()) return cfg;
  const auto bytes = fsc::io::read_file(path);
  try {
    const auto doc = nlohmann::json::parse(bytes.begin(), bytes.end());
    cfg.sample_rate_hz = doc.value("sample_rate_hz", cfg.sample_rate_hz);
    cfg.pre_emphasis = doc.value("pre_emphasis", cfg.pre_emphasis);
    cfg.window_ms = doc.value("window_ms", cfg.window_ms);
    cfg.hop_ms = doc.value("hop_ms", cfg.hop_ms);
    cfg.fft_size = doc.value("fft_size", cfg.fft_size);
    cfg.n_mels = doc.value("n_mels", cfg.n_mels);
    cfg.n_coeffs = doc.value("n_coeffs", cfg.n_coeffs);
    cfg.mel_fmin_hz = doc.value("mel_fmin_hz", cfg.mel_fmin_hz);
    cfg.mel_fmax_hz = doc.value("mel_fmax_hz", cfg.mel_fmax_hz);
  } catch (const nlohmann::json::exception& e) {
    fsc::fail(fsc::Errc::invalid_argument, path + ": " + e.what());
  }
  cfg.validate();
  return cfg;
}

// Representation from the file extension shared by every manifest entry.
fsc::InputKind infer_input_kind(const fsc::Manifest& manifest) {
  std::set<std::string> exts;
  for (const auto& e : manifest.entries) exts.insert(e.path.extension().string());
  fsc::require(exts.size() == 1, fsc::Errc::representation_mismatch,
               "manifest mixes file types; pass --rep explicitly");
  const std::string ext = *exts.begin();
  if (ext == ".wav") return fsc::InputKind::mfcc;
  if (ext == ".fseq") return fsc::InputKind::continuous_import;
  if (ext == ".cseq") return fsc::InputKind::discrete_import;
  fsc::fail(fsc::Errc::unsupported_format, "cannot infer representation from extension '" + ext + "'");
}

fsc::InputKind resolve_input_kind(const std::string& flag, const fsc::Manifest& manifest) {
  return flag.empty() ? infer_input_kind(manifest) : fsc::parse_input_kind(flag);
}

struct Common {
  std::string manifest;
  std::string rep;
  std::string mode = "all-templates";
  std::string reduction = "mean";
  std::string mfcc_config;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--manifest", c.manifest, "JSON-lines manifest")->required()->check(CLI::ExistingFile);
  cmd->add_option("--rep", c.rep, "mfcc | continuous-import | discrete-import (default: from file extension)");
  cmd->add_option("--mode", c.mode, "all-templates | barycentre")->capture_default_str();
  cmd->add_option("--reduction", c.reduction, "mean | min distance over templates")->capture_default_str();
  cmd->add_option("--mfcc-config", c.mfcc_config, "JSON file overriding MFCC defaults");
  cmd->add_option("--jobs", c.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

std::vector<fsc::ScoredItem> score_split(const fsc::Manifest& manifest, fsc::Role split, const Common& c,
                                         fsc::InputKind kind, std::optional<double> tau,
                                         std::optional<fsc::EvaluationReport>* report = nullptr) {
  const auto loader = fsc::make_loader(kind, load_mfcc_config(c.mfcc_config));
  fsc::ModelOptions options;
  options.mode = fsc::parse_template_mode(c.mode);
  options.jobs = c.jobs;
  const auto models = fsc::build_models(manifest, loader, options);
  auto result = fsc::evaluate_split(manifest, split, models, tau, loader, fsc::parse_score_reduction(c.reduction),
                                    c.jobs);
  if (report != nullptr) *report = std::move(result.report);
  return std::move(result.items);
}

void warn_unusable_classes(const std::vector<fsc::ScoredItem>& items) {
  std::map<std::string, std::pair<bool, bool>> seen;
  for (const auto& item : items) {
    auto& [pos, neg] = seen[item.word_class];
    (fsc::is_positive(item.true_label) ? pos : neg) = true;
  }
  for (const auto& [cls, flags] : seen) {
    if (!flags.first) fsc::log::warn("class '" + cls + "' excluded from calibration: no positives");
    else if (!flags.second) fsc::log::warn("class '" + cls + "' excluded from calibration: no negatives");
  }
}

fsc::Role parse_split(const std::string& s) {
  const auto role = fsc::parse_role(s);
  fsc::require(role != fsc::Role::template_, fsc::Errc::invalid_argument, "split must be dev or test");
  return role;
}

// ---------------------------------------------------------------- commands

int run_mfcc(const std::string& wav_dir, const std::string& out_dir, const std::string& config, unsigned jobs) {
  const auto cfg = load_mfcc_config(config);
  const auto inputs = files_with_extension(wav_dir, ".wav");
  fs::create_directories(out_dir);
  const fsc::MfccExtractor extractor(cfg);
  std::vector<std::string> errors(inputs.size());
  fsc::io::parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    try {
      const auto seq = extractor.extract(fsc::read_wav(inputs[i]));
      fsc::write_fseq(seq, fs::path(out_dir) / (inputs[i].stem().string() + ".fseq"));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  int failed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (errors[i].empty()) continue;
    ++failed;
    std::cerr << inputs[i].string() << ": " << errors[i] << "\n";
  }
  std::cout << "extracted " << inputs.size() - failed << " of " << inputs.size() << " files\n";
  return failed == 0 ? 0 : kExitData;
}

int run_train_codebook(const std::string& fseq_dir, const fsc::KMeansConfig& cfg, const std::string& out) {
  std::vector<fsc::FeatureSequence> data;
  for (const auto& p : files_with_extension(fseq_dir, ".fseq")) data.push_back(fsc::read_fseq(p));
  const auto result = fsc::train_codebook(data, cfg);
  fsc::write_codebook(result.codebook, out);
  for (std::size_t i = 0; i < result.inertia_trace.size(); ++i) {
    std::cout << "iter " << i + 1 << " inertia " << result.inertia_trace[i] << "\n";
  }
  std::cout << "codebook K=" << result.codebook.size() << " D=" << result.codebook.dims()
            << (result.converged ? " (converged)" : " (max_iters reached)") << "\n";
  return 0;
}

int run_quantize(const std::string& fseq_dir, const std::string& codebook_path, bool dedup, const std::string& out_dir,
                 unsigned jobs) {
  const auto codebook = fsc::read_codebook(codebook_path);
  const auto inputs = files_with_extension(fseq_dir, ".fseq");
  fs::create_directories(out_dir);
  fsc::io::parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    const auto codes = fsc::quantize(fsc::read_fseq(inputs[i]), codebook, dedup);
    fsc::write_cseq(codes, fs::path(out_dir) / (inputs[i].stem().string() + ".cseq"));
  });
  std::cout << "quantized " << inputs.size() << " files\n";
  return 0;
}

int run_barycentre(const Common& c, const std::string& word_class, const std::string& algo,
                   const std::string& alphabet, std::size_t max_iters, const std::string& out) {
  const auto manifest = fsc::load_manifest(c.manifest);
  const auto kind = resolve_input_kind(c.rep, manifest);
  const auto loader = fsc::make_loader(kind, load_mfcc_config(c.mfcc_config));
  const auto entries = manifest.templates_of(word_class);
  fsc::require(!entries.empty(), fsc::Errc::missing_template, "no templates for class '" + word_class + "'");

  if (algo == "dba") {
    fsc::require(fsc::representation_of(kind) == fsc::Representation::continuous, fsc::Errc::representation_mismatch,
                 "dba needs continuous templates; use --algo edb for code sequences");
    std::vector<fsc::FeatureSequence> templates;
    for (const auto* e : entries) templates.push_back(std::get<fsc::FeatureSequence>(loader(*e)));
    fsc::DbaConfig cfg;
    if (max_iters > 0) cfg.max_iters = max_iters;
    const auto result = fsc::dba(templates, cfg);
    for (std::size_t i = 0; i < result.cost_trace.size(); ++i) {
      std::cout << "iter " << i + 1 << " total_dtw_cost " << result.cost_trace[i] << "\n";
    }
    fsc::write_fseq(result.barycentre, out);
    return 0;
  }
  fsc::require(algo == "edb", fsc::Errc::invalid_argument, "unknown --algo '" + algo + "'");
  fsc::require(fsc::representation_of(kind) == fsc::Representation::discrete, fsc::Errc::representation_mismatch,
               "edb needs discrete templates; use --algo dba for feature sequences");
  std::vector<fsc::CodeSequence> templates;
  for (const auto* e : entries) templates.push_back(std::get<fsc::CodeSequence>(loader(*e)));
  fsc::EdbConfig cfg;
  if (max_iters > 0) cfg.max_iters = max_iters;
  if (alphabet == "observed") cfg.alphabet = fsc::EdbAlphabet::observed_codes;
  else fsc::require(alphabet == "full", fsc::Errc::invalid_argument, "--edb-alphabet must be full or observed");
  const auto result = fsc::edb(templates, cfg);
  std::cout << "initial total_ned " << result.initial_objective << "\n";
  for (std::size_t i = 0; i < result.objective_trace.size(); ++i) {
    std::cout << "iter " << i + 1 << " total_ned " << result.objective_trace[i] << "\n";
  }
  fsc::write_cseq(result.median, out);
  return 0;
}

int run_calibrate(const Common& c, const std::string& out) {
  const auto manifest = fsc::load_manifest(c.manifest);
  const auto kind = resolve_input_kind(c.rep, manifest);
  const auto dev = score_split(manifest, fsc::Role::dev, c, kind, std::nullopt);
  warn_unusable_classes(dev);
  const auto threshold = fsc::calibrate(dev, std::string(fsc::to_string(kind)));
  ordered_json doc = {
      {"tau", threshold.tau},
      {"representation", threshold.representation},
      {"mode", c.mode},
      {"calibration_accuracy", threshold.calibration_accuracy},
      {"n_dev_items", dev.size()},
  };
  fsc::io::write_file_atomic(out, doc.dump(2) + "\n");
  std::cout << "tau " << threshold.tau << " calibration_accuracy " << threshold.calibration_accuracy << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string threshold_file;
  std::optional<double> threshold;
  std::string report;
  std::string roc_dir;
  std::string scores;
  std::string split = "test";
  bool per_class = false;
};

int run_evaluate(Common c, const EvaluateArgs& a) {
  const auto manifest = fsc::load_manifest(c.manifest);
  std::optional<double> tau = a.threshold;
  if (!a.threshold_file.empty()) {
    const auto bytes = fsc::io::read_file(a.threshold_file);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(bytes.begin(), bytes.end());
      const auto rep = doc.at("representation").get<std::string>();
      const auto mode = doc.at("mode").get<std::string>();
      if (!c.rep.empty()) {
        fsc::require(c.rep == rep, fsc::Errc::representation_mismatch,
                     "threshold file is for representation '" + rep + "', run uses '" + c.rep + "'");
      }
      fsc::require(c.mode == mode, fsc::Errc::representation_mismatch,
                   "threshold file is for mode '" + mode + "', run uses '" + c.mode + "'");
      c.rep = rep;
      tau = doc.at("tau").get<double>();
    } catch (const nlohmann::json::exception& e) {
      fsc::fail(fsc::Errc::invalid_argument, a.threshold_file + ": " + e.what());
    }
  }
  fsc::require(tau.has_value(), fsc::Errc::invalid_argument, "evaluate needs --threshold-file or --threshold");
  const auto kind = resolve_input_kind(c.rep, manifest);
  if (!a.threshold_file.empty() && c.rep != std::string(fsc::to_string(kind))) {
    fsc::fail(fsc::Errc::representation_mismatch, "manifest files do not match the threshold file's representation");
  }

  std::optional<fsc::EvaluationReport> report;
  const auto items = score_split(manifest, parse_split(a.split), c, kind, tau, &report);
  std::string json = fsc::report_to_json(*report);

  if (a.per_class) {
    // Diagnostic: thresholds tuned per class on dev, applied per class here.
    const auto dev = score_split(manifest, fsc::Role::dev, c, kind, std::nullopt);
    const auto per_class = fsc::calibrate_per_class(dev, std::string(fsc::to_string(kind)));
    std::vector<fsc::ScoredItem> relabelled = items;
    for (auto& item : relabelled) {
      const auto it = per_class.find(item.word_class);
      item.predicted_correct = fsc::classify(item.score, it != per_class.end() ? it->second.tau : *tau);
    }
    const auto diag = fsc::macro_report(relabelled, std::nullopt);
    auto doc = ordered_json::parse(json);
    ordered_json classes = ordered_json::object();
    for (const auto& [cls, m] : diag.per_class) {
      const auto it = per_class.find(cls);
      classes[cls] = {
          {"tau", it != per_class.end() ? ordered_json(it->second.tau) : ordered_json(nullptr)},
          {"balanced_accuracy", m.balanced_accuracy ? ordered_json(*m.balanced_accuracy) : ordered_json(nullptr)},
      };
    }
    doc["per_class_threshold_diagnostic"] = {
        {"macro_balanced_accuracy", diag.aggregate.macro_balanced_accuracy},
        {"single_threshold_macro_balanced_accuracy", report->aggregate.macro_balanced_accuracy},
        {"classes", classes},
    };
    json = doc.dump(2) + "\n";
    std::cout << "per-class thresholds: macro balanced_accuracy " << diag.aggregate.macro_balanced_accuracy << "\n";
  }

  fsc::io::write_file_atomic(a.report, json);
  if (!a.roc_dir.empty()) fsc::write_roc_dir(*report, a.roc_dir);
  if (!a.scores.empty()) fsc::io::write_file_atomic(a.scores, fsc::scored_items_to_jsonl(items));
  const auto& agg = report->aggregate;
  std::cout << "recall " << agg.micro_recall << " precision " << agg.micro_precision << " f1 " << agg.micro_f1
            << " auc " << agg.macro_auc << " balanced_accuracy " << agg.macro_balanced_accuracy << "\n";
  return 0;
}

std::vector<double> pooled_input(const fsc::Sequence& seq) {
  const auto* f = std::get_if<fsc::FeatureSequence>(&seq);
  fsc::require(f != nullptr, fsc::Errc::representation_mismatch, "the regression baseline needs continuous features");
  return fsc::mean_pool(*f);
}

int run_baseline_train(const Common& c, const fsc::TrainConfig& cfg, const std::string& out) {
  const auto manifest = fsc::load_manifest(c.manifest);
  const auto kind = resolve_input_kind(c.rep, manifest);
  const auto loader = fsc::make_loader(kind, load_mfcc_config(c.mfcc_config));
  std::vector<fsc::LabelledVector> data;
  for (const auto* e : manifest.with_role(fsc::Role::template_)) data.push_back({pooled_input(loader(*e)), e->word_class});
  const auto result = fsc::train_softmax(data, cfg);
  fsc::save_softmax(result, cfg, out);
  for (std::size_t i = 0; i < result.loss_trace.size(); ++i) {
    std::cout << "epoch " << i + 1 << " loss " << result.loss_trace[i] << "\n";
  }
  return 0;
}

int run_baseline_evaluate(const Common& c, const std::string& model_prefix, const EvaluateArgs& a) {
  const auto manifest = fsc::load_manifest(c.manifest);
  const auto kind = resolve_input_kind(c.rep, manifest);
  const auto loader = fsc::make_loader(kind, load_mfcc_config(c.mfcc_config));
  const auto model = fsc::load_softmax(model_prefix);
  auto entries = manifest.with_role(parse_split(a.split));
  fsc::require(!entries.empty(), fsc::Errc::empty_input, "split '" + a.split + "' has no items");
  std::sort(entries.begin(), entries.end(), [](const auto* x, const auto* y) { return x->id < y->id; });
  for (const auto* e : entries) model.class_index(e->word_class);

  std::vector<fsc::ScoredItem> items(entries.size());
  fsc::io::parallel_for(entries.size(), c.jobs, [&](std::size_t i) {
    const auto& e = *entries[i];
    const auto verdict = fsc::assess(model, pooled_input(loader(e)), e.word_class);
    items[i] = {e.id, e.word_class, verdict.score, e.label, verdict.predicted_correct};
  });
  const auto report = fsc::macro_report(items, std::nullopt);
  fsc::io::write_file_atomic(a.report, fsc::report_to_json(report));
  if (!a.roc_dir.empty()) fsc::write_roc_dir(report, a.roc_dir);
  if (!a.scores.empty()) fsc::io::write_file_atomic(a.scores, fsc::scored_items_to_jsonl(items));
  const auto& agg = report.aggregate;
  std::cout << "recall " << agg.micro_recall << " precision " << agg.micro_precision << " f1 " << agg.micro_f1
            << " auc " << agg.macro_auc << " balanced_accuracy " << agg.macro_balanced_accuracy << "\n";
  return 0;
}

int run_synth(const fsc::synth::ClassroomConfig& cfg, const std::string& out_dir) {
  const auto room = fsc::synth::generate_classroom(cfg);
  const auto manifest = fsc::synth::write_classroom(room, out_dir);
  std::cout << "wrote " << room.recordings.size() << " recordings, manifest " << manifest.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  fsc::log::init_from_env();
  CLI::App app{"fsc: few-shot isolated-word assessment with template matching"};
  app.require_subcommand(1);

  // mfcc
  std::string wav_dir, out_dir, mfcc_config;
  unsigned jobs = 1;
  auto* mfcc = app.add_subcommand("mfcc", "Extract MFCC .fseq files from a directory of mono WAVs");
  mfcc->add_option("--wav-dir", wav_dir)->required();
  mfcc->add_option("--out-dir", out_dir)->required();
  mfcc->add_option("--config", mfcc_config, "JSON file overriding MFCC defaults");
  mfcc->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // train-codebook
  std::string fseq_dir, out;
  fsc::KMeansConfig kcfg;
  auto* train_cb = app.add_subcommand("train-codebook", "Train a K-means codebook over .fseq frames");
  train_cb->add_option("--fseq-dir", fseq_dir)->required();
  train_cb->add_option("--k", kcfg.k)->capture_default_str();
  train_cb->add_option("--seed", kcfg.seed)->capture_default_str();
  train_cb->add_option("--max-iters", kcfg.max_iters)->capture_default_str();
  train_cb->add_option("--tolerance", kcfg.tolerance)->capture_default_str();
  train_cb->add_option("--out", out)->required();

  // quantize
  std::string codebook;
  bool dedup = false;
  auto* quant = app.add_subcommand("quantize", "Map .fseq frames to nearest-centroid .cseq codes");
  quant->add_option("--fseq-dir", fseq_dir)->required();
  quant->add_option("--codebook", codebook)->required();
  quant->add_flag("--dedup", dedup, "collapse runs of repeated codes");
  quant->add_option("--out-dir", out_dir)->required();
  quant->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // barycentre
  Common common;
  std::string word_class, algo, alphabet = "full";
  std::size_t max_iters = 0;
  auto* bary = app.add_subcommand("barycentre", "Average one class's templates (DBA or EDB)");
  add_common(bary, common);
  bary->add_option("--class", word_class)->required();
  bary->add_option("--algo", algo, "dba | edb")->required();
  bary->add_option("--edb-alphabet", alphabet, "full | observed")->capture_default_str();
  bary->add_option("--max-iters", max_iters, "iteration cap (0 = default)");
  bary->add_option("--out", out)->required();

  // calibrate
  auto* calib = app.add_subcommand("calibrate", "Choose one global threshold on the dev split");
  add_common(calib, common);
  calib->add_option("--out", out, "threshold JSON")->required();

  // evaluate
  EvaluateArgs eval_args;
  auto* eval = app.add_subcommand("evaluate", "Score a split and write an evaluation report");
  add_common(eval, common);
  auto* tf = eval->add_option("--threshold-file", eval_args.threshold_file);
  auto* tv = eval->add_option("--threshold", eval_args.threshold);
  tf->excludes(tv);
  eval->add_option("--report", eval_args.report)->required();
  eval->add_option("--roc-dir", eval_args.roc_dir, "write per-class ROC CSVs here");
  eval->add_option("--scores", eval_args.scores, "write scored items as JSON lines");
  eval->add_option("--split", eval_args.split, "dev | test")->capture_default_str();
  eval->add_flag("--per-class-thresholds", eval_args.per_class, "diagnostic: also report per-class thresholds");

  // baseline
  fsc::TrainConfig tcfg;
  auto* btrain = app.add_subcommand("baseline-train", "Train the softmax regression baseline on templates");
  add_common(btrain, common);
  btrain->add_option("--lr", tcfg.learning_rate)->capture_default_str();
  btrain->add_option("--epochs", tcfg.epochs)->capture_default_str();
  btrain->add_option("--l2", tcfg.l2)->capture_default_str();
  btrain->add_option("--seed", tcfg.seed)->capture_default_str();
  btrain->add_option("--out", out, "model prefix (.fseq + .json)")->required();

  std::string model_prefix;
  EvaluateArgs beval_args;
  auto* beval = app.add_subcommand("baseline-evaluate", "Evaluate the softmax baseline on a split");
  add_common(beval, common);
  beval->add_option("--model", model_prefix, "model prefix")->required();
  beval->add_option("--report", beval_args.report)->required();
  beval->add_option("--roc-dir", beval_args.roc_dir);
  beval->add_option("--scores", beval_args.scores);
  beval->add_option("--split", beval_args.split)->capture_default_str();

  // synth
  fsc::synth::ClassroomConfig scfg;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic classroom dataset (.fseq + manifest)");
  synth->add_option("--out-dir", out_dir)->required();
  synth->add_option("--seed", scfg.seed)->capture_default_str();
  synth->add_option("--classes", scfg.n_classes)->capture_default_str();
  synth->add_option("--impostor-classes", scfg.n_impostor_classes)->capture_default_str();
  synth->add_option("--templates", scfg.templates_per_class)->capture_default_str();
  synth->add_option("--dims", scfg.dims)->capture_default_str();
  synth->add_option("--sigma", scfg.noise_sigma)->capture_default_str();
  synth->add_option("--sigma-spread", scfg.noise_scale_spread)->capture_default_str();
  synth->add_option("--misreading-fraction", scfg.misreading_fraction)->capture_default_str();
  synth->add_option("--impostor-blend", scfg.impostor_blend)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mfcc) return run_mfcc(wav_dir, out_dir, mfcc_config, jobs);
    if (*train_cb) return run_train_codebook(fseq_dir, kcfg, out);
    if (*quant) return run_quantize(fseq_dir, codebook, dedup, out_dir, jobs);
    if (*bary) return run_barycentre(common, word_class, algo, alphabet, max_iters, out);
    if (*calib) return run_calibrate(common, out);
    if (*eval) return run_evaluate(common, eval_args);
    if (*btrain) return run_baseline_train(common, tcfg, out);
    if (*beval) return run_baseline_evaluate(common, model_prefix, beval_args);
    if (*synth) return run_synth(scfg, out_dir);
  } catch (const fsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == fsc::Errc::invariant ? kExitInternal : kExitData;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
