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
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mvqc/data/split.hpp"
#include "mvqc/gradients/param_store.hpp"
#include "mvqc/metrics/metrics.hpp"
#include "mvqc/model/multivqc.hpp"
#include "mvqc/training/loss.hpp"

namespace mvqc::training {

struct TrainConfig {
  std::size_t max_epochs = 100;
  std::size_t patience = 5;
  double learning_rate = 0.01;
  std::size_t batch_size = 16;
  std::uint64_t seed = 0;
  /// Initial parameters are drawn uniformly from [0, init_scale).
  double init_scale = 2.0 * std::numbers::pi;

  /// Throws ConfigError.
  void validate() const;
  [[nodiscard]] nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct Evaluation {
  double loss = 0.0;  ///< mean weighted loss
  metrics::ConfusionCounts counts;
  metrics::Metrics metrics;
  std::vector<int> predictions;
};

struct EpochRecord {
  std::size_t epoch = 0;  ///< 0-based
  double train_loss = 0.0;
  double validation_loss = 0.0;
  metrics::Metrics train;
  metrics::Metrics validation;
};

struct TrainReport {
  TrainConfig config;
  model::MultiVqcConfig model;
  ClassWeights weights;
  std::vector<double> initial_params;
  std::vector<EpochRecord> epochs;
  std::size_t best_epoch = 0;
  std::vector<double> final_params;  ///< parameters after best_epoch
  bool stopped_early = false;

  [[nodiscard]] double best_validation_loss() const { return epochs.at(best_epoch).validation_loss; }
  [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] Evaluation evaluate(const model::MultiVqcModel& model,
                                  const gradients::ParamStore& params, const data::Dataset& data,
                                  const ClassWeights& weights);

/// Uniform draws in [0, init_scale) from the seed's initialization stream.
[[nodiscard]] std::vector<double> initial_params(std::size_t n_params, const TrainConfig& config);

/// Shuffled mini-batch Adam on the mean weighted loss, with early stopping
/// on the validation loss. Class weights come from the training labels.
/// Throws NumericalError when a batch loss is not finite.
[[nodiscard]] TrainReport train(const model::MultiVqcConfig& model, const data::SplitDataset& data,
                                const TrainConfig& config);

struct LayerSearchConfig {
  std::size_t max_layers = 12;
  /// Non-improving steps tolerated before stopping; n_qubits when unset.
  std::optional<std::size_t> patience;
};

struct LayerSearchReport {
  std::vector<std::size_t> tried_layer_counts;
  std::vector<double> validation_losses;
  std::size_t chosen_layers = 0;
  std::string stop_reason;
  TrainReport best;  ///< training run at chosen_layers

  [[nodiscard]] nlohmann::json to_json() const;
};

/// Result of the bare search loop, without the training payload.
struct LayerSearchTrace {
  std::vector<std::size_t> tried_layer_counts;
  std::vector<double> validation_losses;
  std::size_t chosen_layers = 0;
  std::string stop_reason;
};

/// Evaluates L = 1, 2, ... until `patience` consecutive counts fail to
/// beat the best loss or `max_layers` is reached.
[[nodiscard]] LayerSearchTrace search_layers(
    std::size_t patience, std::size_t max_layers,
    const std::function<double(std::size_t layers)>& validation_loss);

/// Layer search with one shared L for every VQC of the chain, retraining
/// from scratch at each L with the same seed.
[[nodiscard]] LayerSearchReport select_layers(const model::MultiVqcConfig& base,
                                              const data::SplitDataset& data,
                                              const TrainConfig& config,
                                              const LayerSearchConfig& search = {});

[[nodiscard]] nlohmann::json metrics_to_json(const metrics::Metrics& m);
[[nodiscard]] metrics::Metrics metrics_from_json(const nlohmann::json& j);

}  // namespace mvqc::training
