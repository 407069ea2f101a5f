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

#include "json.hpp"
#include "mvqc/data/split.hpp"
#include "mvqc/training/loss.hpp"
#include "mvqc/training/trainer.hpp"

namespace mvqc::baseline {

struct LogRegModel {
  std::vector<double> weights;
  double bias = 0.0;

  [[nodiscard]] nlohmann::json to_json() const;
  static LogRegModel from_json(const nlohmann::json& j);
  friend bool operator==(const LogRegModel&, const LogRegModel&) = default;
};

struct LogRegPrediction {
  int label = 0;
  double probability = 0.0;  ///< P(class 1)
};

struct LogRegReport {
  LogRegModel model;
  std::vector<double> train_loss;
  std::vector<double> validation_loss;
  std::size_t best_epoch = 0;
  bool stopped_early = false;
};

/// Weighted cross-entropy, full-batch Adam from zero initialization, early
/// stopping on the validation loss. Parameters from the best epoch.
[[nodiscard]] LogRegReport fit_logreg(const data::SplitDataset& data,
                                      const training::ClassWeights& weights,
                                      const training::TrainConfig& config);

/// sigmoid(w.x + b); class 1 when the probability is >= 0.5. Throws
/// ConfigError on width mismatch.
[[nodiscard]] LogRegPrediction predict_logreg(const LogRegModel& model,
                                              std::span<const double> features);

[[nodiscard]] std::vector<int> predict_all(const LogRegModel& model, const data::Dataset& data);

/// Mean weighted cross-entropy over a dataset.
[[nodiscard]] double logreg_loss(const LogRegModel& model, const data::Dataset& data,
                                 const training::ClassWeights& weights);

}  // namespace mvqc::baseline
