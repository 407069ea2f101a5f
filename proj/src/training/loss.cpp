// Copyright 2026 The mvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvqc/training/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mvqc/error.hpp"

namespace mvqc::training {

ClassWeights compute_class_weights(std::span<const int> labels) {
  std::size_t count0 = 0;
  std::size_t count1 = 0;
  for (int y : labels) {
    if (y == 0) {
      ++count0;
    } else if (y == 1) {
      ++count1;
    } else {
      throw DataError("label " + std::to_string(y) + " is not binary");
    }
  }
  if (count0 == 0 || count1 == 0) {
    throw DataError("class weights need both classes present (counts " + std::to_string(count0) +
                    "/" + std::to_string(count1) + ")");
  }
  const auto n = static_cast<double>(count0 + count1);
  return ClassWeights{static_cast<double>(count1) / n, static_cast<double>(count0) / n};
}

double weighted_loss(const model::ModelOutput& output, std::size_t label,
                     const ClassWeights& weights) {
  const double p = std::max(output.probabilities.at(label), kProbabilityFloor);
  return -weights[label] * std::log(p);
}

std::vector<double> weighted_loss_score_gradient(const model::ModelOutput& output,
                                                 std::size_t label,
                                                 const ClassWeights& weights) {
  const auto& p = output.probabilities;
  std::vector<double> grad(p.size(), 0.0);
  if (p.at(label) < kProbabilityFloor) {
    return grad;
  }
  const double w = weights[label];
  for (std::size_t j = 0; j < p.size(); ++j) {
    grad[j] = w * (p[j] - (j == label ? 1.0 : 0.0));
  }
  return grad;
}

}  // namespace mvqc::training
