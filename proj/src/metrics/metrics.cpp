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

#include "mvqc/metrics/metrics.hpp"

#include <string>

#include "mvqc/error.hpp"

namespace mvqc::metrics {

ConfusionCounts confusion(std::span<const int> predictions, std::span<const int> labels,
                          int positive_class) {
  if (predictions.size() != labels.size()) {
    throw DataError("predictions (" + std::to_string(predictions.size()) + ") and labels (" +
                    std::to_string(labels.size()) + ") differ in length");
  }
  if (labels.empty()) {
    throw DataError("confusion counts need at least one sample");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool predicted_pos = predictions[i] == positive_class;
    const bool actual_pos = labels[i] == positive_class;
    if (predicted_pos && actual_pos) {
      ++c.tp;
    } else if (predicted_pos) {
      ++c.fp;
    } else if (actual_pos) {
      ++c.fn;
    } else {
      ++c.tn;
    }
  }
  return c;
}

Metrics compute_metrics(const ConfusionCounts& c) {
  Metrics m;
  const auto tp = static_cast<double>(c.tp);
  if (c.tp + c.fp == 0) {
    m.precision_undefined = true;
  } else {
    m.precision = tp / static_cast<double>(c.tp + c.fp);
  }
  if (c.tp + c.fn == 0) {
    m.recall_undefined = true;
  } else {
    m.recall = tp / static_cast<double>(c.tp + c.fn);
  }
  const double denom = m.precision + m.recall;
  if (denom == 0.0) {
    m.f1_undefined = true;
  } else {
    m.f1 = 2.0 * m.precision * m.recall / denom;
  }
  return m;
}

}  // namespace mvqc::metrics
