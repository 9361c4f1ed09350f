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

#include "fsc/pooling.hpp"

namespace fsc {

std::vector<double> mean_pool(const FeatureSequence& seq) {
  std::vector<double> mean(seq.dims(), 0.0);
  for (std::size_t t = 0; t < seq.length(); ++t) {
    const auto frame = seq.frame(t);
    for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += frame[d];
  }
  for (double& m : mean) m /= static_cast<double>(seq.length());
  return mean;
}

}  // namespace fsc
