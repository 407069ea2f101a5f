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

namespace mvqc::metrics {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  [[nodiscard]] std::size_t total() const { return tp + fp + fn + tn; }

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Precision, recall and F1. A 0/0 ratio is reported as 0 and flagged.
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Throws DataError on length mismatch or empty input.
[[nodiscard]] ConfusionCounts confusion(std::span<const int> predictions,
                                        std::span<const int> labels, int positive_class = 1);

[[nodiscard]] Metrics compute_metrics(const ConfusionCounts& counts);

[[nodiscard]] inline Metrics evaluate(std::span<const int> predictions,
                                      std::span<const int> labels, int positive_class = 1) {
  return compute_metrics(confusion(predictions, labels, positive_class));
}

}  // namespace mvqc::metrics
