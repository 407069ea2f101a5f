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

/**
 * @file sweep.hpp
 * Grid sweep over chain shapes. Each cell runs a layer search and is
 * evaluated on all three splits. Cells are independent and seeded from
 * (seed, feature count, cell index), so the table does not depend on the
 * number of workers or on which cells were resumed from disk.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mvqc/data/split.hpp"
#include "mvqc/metrics/metrics.hpp"
#include "mvqc/model/multivqc.hpp"
#include "mvqc/training/trainer.hpp"

namespace mvqc::training {

struct SweepGrid {
  std::vector<circuit::EncodingAxis> encodings{circuit::EncodingAxis::RX,
                                               circuit::EncodingAxis::RY};
  std::vector<circuit::AnsatzKind> ansatzes{circuit::AnsatzKind::BasicEntangling,
                                            circuit::AnsatzKind::StronglyEntangling};
  std::vector<bool> reuploading{true, false};
  std::vector<std::size_t> n_vqcs{1, 2, 3};
  std::size_t n_classes = 2;
  model::RescaleMode rescale = model::RescaleMode::Pi;
  LayerSearchConfig layer_search;
  /// Adds one logistic-regression row per feature count.
  bool include_logreg = false;

  [[nodiscard]] std::size_t cells() const;
  /// Cell order: encoding, ansatz, reuploading, n_vqcs (innermost).
  [[nodiscard]] std::vector<model::ChainSpec> enumerate(std::size_t n_features) const;
  [[nodiscard]] nlohmann::json to_json() const;
};

struct SweepRow {
  std::string model = "mvqc";  ///< "mvqc" or "logreg"
  std::size_t cell_index = 0;
  model::ChainSpec spec;  ///< n_layers holds the chosen layer count
  std::size_t n_params = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  metrics::Metrics train;
  metrics::Metrics validation;
  metrics::Metrics test;
  double validation_loss = 0.0;
  /// Layer search and training curves.
  nlohmann::json detail = nlohmann::json::object();

  [[nodiscard]] nlohmann::json to_json() const;
  static SweepRow from_json(const nlohmann::json& j);
};

struct SweepOptions {
  /// 0 means std::thread::hardware_concurrency().
  std::size_t workers = 0;
  /// Previously completed row for a cell, if any.
  std::function<std::optional<SweepRow>(std::size_t cell)> load_completed;
  /// Called once per freshly computed row, from the worker thread.
  std::function<void(const SweepRow&)> on_row;
};

/// Seed of one cell.
[[nodiscard]] std::uint64_t cell_seed(std::uint64_t base, std::size_t n_features,
                                      std::size_t cell);

/// Runs one grid cell; failures are captured in the row.
[[nodiscard]] SweepRow run_cell(const model::ChainSpec& spec, std::size_t cell,
                                const data::SplitDataset& data, const TrainConfig& config,
                                const LayerSearchConfig& search);

[[nodiscard]] SweepRow run_logreg_row(const data::SplitDataset& data, const TrainConfig& config);

/// All cells for one preprocessed split, in cell order (logreg row last).
[[nodiscard]] std::vector<SweepRow> sweep(const SweepGrid& grid, const data::SplitDataset& data,
                                          const TrainConfig& config,
                                          const SweepOptions& options = {});

/// Successful rows by validation F1 (descending), then fewer parameters,
/// then fewer VQCs, then cell order; failed rows last in cell order.
[[nodiscard]] std::vector<SweepRow> rank(std::vector<SweepRow> rows);

/// Top-ranked successful row per (feature count, n_vqcs, model).
[[nodiscard]] std::vector<SweepRow> best_by_group(const std::vector<SweepRow>& ranked);

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace mvqc::training
