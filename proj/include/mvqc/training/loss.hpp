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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mvqc/model/multivqc.hpp"

namespace mvqc::training {

/// Per-class multipliers of the sample loss.
struct ClassWeights {
  double class0 = 1.0;
  double class1 = 1.0;

  [[nodiscard]] double operator[](std::size_t label) const { return label == 0 ? class0 : class1; }

  friend bool operator==(const ClassWeights&, const ClassWeights&) = default;
};

/// Each class is weighted by the prevalence of the other one:
/// weight_1 = count_0 / N, weight_0 = count_1 / N. Both classes then carry
/// the same total weight. Throws DataError unless both classes occur.
[[nodiscard]] ClassWeights compute_class_weights(std::span<const int> labels);

inline constexpr double kProbabilityFloor = 1e-12;

/// -weight(label) * log(max(p[label], 1e-12)).
[[nodiscard]] double weighted_loss(const model::ModelOutput& output, std::size_t label,
                                   const ClassWeights& weights);

/// d loss / d class_scores through the softmax. Zero when the probability
/// sits on the floor.
[[nodiscard]] std::vector<double> weighted_loss_score_gradient(const model::ModelOutput& output,
                                                               std::size_t label,
                                                               const ClassWeights& weights);

}  // namespace mvqc::training
