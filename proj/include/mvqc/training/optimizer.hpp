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
#include <limits>
#include <span>
#include <vector>

namespace mvqc::training {

struct AdamConfig {
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Bias-corrected Adam over a flat parameter vector.
class Adam {
 public:
  Adam(std::size_t n_params, AdamConfig config);

  void step(std::span<double> params, std::span<const double> gradient);

  [[nodiscard]] std::size_t steps() const { return t_; }
  [[nodiscard]] const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::size_t t_ = 0;
};

/// Tracks validation losses epoch by epoch. Training should stop once
/// `patience` consecutive epochs failed to beat the best loss.
class EarlyStopping {
 public:
  explicit EarlyStopping(std::size_t patience);

  /// Records the next epoch; true when it set a new best.
  bool observe(double loss);

  [[nodiscard]] bool should_stop() const { return stale_ >= patience_; }
  [[nodiscard]] std::size_t best_epoch() const { return best_epoch_; }
  [[nodiscard]] double best_loss() const { return best_loss_; }
  [[nodiscard]] std::size_t epochs_seen() const { return seen_; }

 private:
  std::size_t patience_;
  std::size_t stale_ = 0;
  std::size_t seen_ = 0;
  std::size_t best_epoch_ = 0;
  double best_loss_ = std::numeric_limits<double>::infinity();
};

}  // namespace mvqc::training
