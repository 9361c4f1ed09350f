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

#ifndef FSC_BASELINE_HPP
#define FSC_BASELINE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsc {

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-3;
  std::uint64_t seed = 0;  // unused by full-batch training; kept in the model sidecar

  void validate() const;
};

struct LabelledVector {
  std::vector<double> x;
  std::string word_class;
};

/// Multinomial logistic regression: p = softmax(W x + b), W is C x D.
class SoftmaxModel {
 public:
  SoftmaxModel(std::vector<std::string> classes, std::size_t dims, std::vector<double> weights,
               std::vector<double> bias);

  static SoftmaxModel zeros(std::vector<std::string> classes, std::size_t dims);

  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t dims() const noexcept { return dims_; }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> bias() const noexcept { return bias_; }
  std::span<double> mutable_weights() noexcept { return weights_; }
  std::span<double> mutable_bias() noexcept { return bias_; }

  std::size_t class_index(std::string_view name) const;
  std::vector<double> logits(std::span<const double> x) const;

 private:
  std::vector<std::string> classes_;
  std::size_t dims_;
  std::vector<double> weights_;
  std::vector<double> bias_;
};

struct SoftmaxObjective {
  double loss = 0.0;  // mean cross-entropy + (l2/2) ||W||^2
  std::vector<double> grad_weights;
  std::vector<double> grad_bias;
};

SoftmaxObjective softmax_objective(const SoftmaxModel& model, std::span<const LabelledVector> data, double l2);

struct TrainResult {
  SoftmaxModel model;
  std::vector<double> loss_trace;  // loss after each epoch, non-increasing
  double final_learning_rate = 0.0;
  std::size_t halvings = 0;
};

/// Full-batch gradient descent from zero weights. Classes are ordered by
/// name. When a step raises the loss, the learning rate is halved and the
/// step retried, up to 20 times; if no retry helps, training stops early.
TrainResult train_softmax(std::span<const LabelledVector> data, const TrainConfig& cfg);

// Log-sum-exp stabilised.
std::vector<double> predict_proba(const SoftmaxModel& model, std::span<const double> x);

struct Assessment {
  bool predicted_correct = false;
  double score = 1.0;  // 1 - P(target); lower means more likely correct
};

/// Correct iff the argmax class (lowest index on ties) is the target.
Assessment assess(const SoftmaxModel& model, std::span<const double> x, std::string_view target_class);

// <prefix>.fseq holds W as a C x D float32 matrix; <prefix>.json holds
// classes, bias, the training config and the loss trace.
void save_softmax(const TrainResult& result, const TrainConfig& cfg, const std::filesystem::path& prefix);
SoftmaxModel load_softmax(const std::filesystem::path& prefix);

}  // namespace fsc

#endif  // FSC_BASELINE_HPP
