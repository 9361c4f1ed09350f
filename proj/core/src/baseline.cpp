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

#include "fsc/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "fsc/error.hpp"
#include "fsc/io.hpp"
#include "fsc/seqdata.hpp"

namespace fsc {
namespace {

constexpr int kMaxHalvings = 20;

std::vector<double> softmax(std::vector<double> z) {
  const double peak = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - peak);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return z;
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix, const char* suffix) {
  std::filesystem::path p = prefix;
  p += suffix;
  return p;
}

}  // namespace

void TrainConfig::validate() const {
  require(learning_rate > 0.0 && std::isfinite(learning_rate), Errc::invalid_argument, "learning_rate must be > 0");
  require(epochs >= 1, Errc::invalid_argument, "epochs must be at least 1");
  require(l2 >= 0.0 && std::isfinite(l2), Errc::invalid_argument, "l2 must be >= 0");
}

SoftmaxModel::SoftmaxModel(std::vector<std::string> classes, std::size_t dims, std::vector<double> weights,
                           std::vector<double> bias)
    : classes_(std::move(classes)), dims_(dims), weights_(std::move(weights)), bias_(std::move(bias)) {
  require(classes_.size() >= 2, Errc::invalid_argument, "softmax model needs at least two classes");
  require(dims_ >= 1, Errc::invalid_argument, "softmax model needs at least one input dimension");
  require(weights_.size() == classes_.size() * dims_ && bias_.size() == classes_.size(), Errc::dimension_mismatch,
          "weight or bias shape does not match classes x dims");
  for (double w : weights_) require(std::isfinite(w), Errc::non_finite, "non-finite weight");
  for (double b : bias_) require(std::isfinite(b), Errc::non_finite, "non-finite bias");
}

SoftmaxModel SoftmaxModel::zeros(std::vector<std::string> classes, std::size_t dims) {
  const std::size_t c = classes.size();
  return SoftmaxModel(std::move(classes), dims, std::vector<double>(c * dims, 0.0), std::vector<double>(c, 0.0));
}

std::size_t SoftmaxModel::class_index(std::string_view name) const {
  const auto it = std::find(classes_.begin(), classes_.end(), name);
  require(it != classes_.end(), Errc::unknown_value, "class '" + std::string(name) + "' is not in the model");
  return static_cast<std::size_t>(it - classes_.begin());
}

std::vector<double> SoftmaxModel::logits(std::span<const double> x) const {
  require(x.size() == dims_, Errc::dimension_mismatch,
          "input has " + std::to_string(x.size()) + " dims, model expects " + std::to_string(dims_));
  std::vector<double> z(bias_.begin(), bias_.end());
  for (std::size_t c = 0; c < z.size(); ++c) {
    const double* w = weights_.data() + c * dims_;
    for (std::size_t d = 0; d < dims_; ++d) z[c] += w[d] * x[d];
  }
  return z;
}

SoftmaxObjective softmax_objective(const SoftmaxModel& model, std::span<const LabelledVector> data, double l2) {
  require(!data.empty(), Errc::empty_input, "no training samples");
  const std::size_t classes = model.num_classes();
  const std::size_t dims = model.dims();
  SoftmaxObjective obj;
  obj.grad_weights.assign(classes * dims, 0.0);
  obj.grad_bias.assign(classes, 0.0);
  const double inv_n = 1.0 / static_cast<double>(data.size());

  for (const auto& sample : data) {
    const std::size_t target = model.class_index(sample.word_class);
    const auto z = model.logits(sample.x);
    const double peak = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - peak);
    const double log_norm = peak + std::log(sum);
    obj.loss += (log_norm - z[target]) * inv_n;
    for (std::size_t c = 0; c < classes; ++c) {
      const double residual = (std::exp(z[c] - log_norm) - (c == target ? 1.0 : 0.0)) * inv_n;
      obj.grad_bias[c] += residual;
      double* g = obj.grad_weights.data() + c * dims;
      for (std::size_t d = 0; d < dims; ++d) g[d] += residual * sample.x[d];
    }
  }
  const auto w = model.weights();
  double sq = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sq += w[i] * w[i];
    obj.grad_weights[i] += l2 * w[i];
  }
  obj.loss += 0.5 * l2 * sq;
  return obj;
}

TrainResult train_softmax(std::span<const LabelledVector> data, const TrainConfig& cfg) {
  cfg.validate();
  require(!data.empty(), Errc::empty_input, "no training samples");
  const std::size_t dims = data.front().x.size();
  std::set<std::string> names;
  for (const auto& s : data) {
    require(s.x.size() == dims, Errc::dimension_mismatch, "training vectors differ in dimension");
    names.insert(s.word_class);
  }
  require(names.size() >= 2, Errc::invalid_argument, "training data needs at least two classes");

  TrainResult result{SoftmaxModel::zeros({names.begin(), names.end()}, dims), {}, cfg.learning_rate, 0};
  SoftmaxObjective current = softmax_objective(result.model, data, cfg.l2);
  double lr = cfg.learning_rate;

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxHalvings; ++attempt) {
      SoftmaxModel candidate = result.model;
      auto w = candidate.mutable_weights();
      auto b = candidate.mutable_bias();
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lr * current.grad_weights[i];
      for (std::size_t i = 0; i < b.size(); ++i) b[i] -= lr * current.grad_bias[i];
      SoftmaxObjective next = softmax_objective(candidate, data, cfg.l2);
      if (std::isfinite(next.loss) && next.loss <= current.loss) {
        result.model = std::move(candidate);
        current = std::move(next);
        accepted = true;
        break;
      }
      if (attempt < kMaxHalvings) {
        lr *= 0.5;
        ++result.halvings;
      }
    }
    result.loss_trace.push_back(current.loss);
    if (!accepted) break;
  }
  for (std::size_t i = 1; i < result.loss_trace.size(); ++i) {
    require(result.loss_trace[i] <= result.loss_trace[i - 1], Errc::invariant, "training loss increased");
  }
  result.final_learning_rate = lr;
  return result;
}

std::vector<double> predict_proba(const SoftmaxModel& model, std::span<const double> x) {
  return softmax(model.logits(x));
}

Assessment assess(const SoftmaxModel& model, std::span<const double> x, std::string_view target_class) {
  const std::size_t target = model.class_index(target_class);
  const auto p = predict_proba(model, x);
  const auto argmax = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  return {argmax == target, 1.0 - p[target]};
}

void save_softmax(const TrainResult& result, const TrainConfig& cfg, const std::filesystem::path& prefix) {
  const auto& m = result.model;
  std::vector<float> w(m.weights().begin(), m.weights().end());
  write_fseq(FeatureSequence(m.num_classes(), m.dims(), std::move(w)), with_suffix(prefix, ".fseq"));
  nlohmann::ordered_json doc;
  doc["classes"] = m.classes();
  doc["bias"] = std::vector<double>(m.bias().begin(), m.bias().end());
  doc["config"] = {{"learning_rate", cfg.learning_rate}, {"epochs", cfg.epochs}, {"l2", cfg.l2}, {"seed", cfg.seed}};
  doc["loss_trace"] = result.loss_trace;
  doc["final_learning_rate"] = result.final_learning_rate;
  io::write_file_atomic(with_suffix(prefix, ".json"), doc.dump(2) + "\n");
}

SoftmaxModel load_softmax(const std::filesystem::path& prefix) {
  const auto weights = read_fseq(with_suffix(prefix, ".fseq"));
  const auto json_path = with_suffix(prefix, ".json");
  const auto bytes = io::read_file(json_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
    auto classes = doc.at("classes").get<std::vector<std::string>>();
    auto bias = doc.at("bias").get<std::vector<double>>();
    require(classes.size() == weights.length(), Errc::dimension_mismatch,
            "sidecar lists " + std::to_string(classes.size()) + " classes, weights have " +
                std::to_string(weights.length()) + " rows");
    std::vector<double> w(weights.values().begin(), weights.values().end());
    return SoftmaxModel(std::move(classes), weights.dims(), std::move(w), std::move(bias));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, json_path.string() + ": " + e.what());
  }
}

}  // namespace fsc
