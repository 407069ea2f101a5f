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
 * @file run_config.hpp
 * Resolved configuration of one CLI invocation. Sources, lowest precedence
 * first: built-in defaults, the JSON config file, MVQC_OUTPUT_DIR (output
 * directory only), then flat `--section.key value` flags.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mvqc/data/dataset.hpp"
#include "mvqc/data/preprocessing.hpp"
#include "mvqc/data/split.hpp"
#include "mvqc/model/multivqc.hpp"
#include "mvqc/training/trainer.hpp"

namespace mvqc::cli {

inline constexpr const char* kOutputDirEnv = "MVQC_OUTPUT_DIR";

struct RunConfig {
  /// Dataset name (looked up under data_dir/schemas) or a CSV path.
  std::string dataset = "diabetes";
  /// Schema path; derived from the dataset name when empty.
  std::string schema;
  std::string data_dir = "data";
  std::string output_dir = "out";
  std::size_t n_components = 2;
  data::AngleRange angle_range = data::AngleRange::ZeroPi;
  data::SplitFractions split;
  /// Split seed; the training seed when unset.
  std::optional<std::uint64_t> split_seed;
  model::ChainSpec model;  ///< n_features follows n_components
  training::TrainConfig train;
  bool layer_search = false;
  training::LayerSearchConfig search;

  [[nodiscard]] std::uint64_t resolved_split_seed() const { return split_seed.value_or(train.seed); }
  [[nodiscard]] model::MultiVqcConfig model_config() const;

  [[nodiscard]] nlohmann::json to_json() const;
  /// Throws ConfigError on unknown keys or invalid values.
  static RunConfig from_json(const nlohmann::json& j);
};

/// One `--flag` override and the JSON path it writes.
struct OverrideKey {
  std::string flag;  ///< e.g. "train.learning-rate"
  std::vector<std::string> path;  ///< e.g. {"train", "learning_rate"}
  std::string help;
};

[[nodiscard]] const std::vector<OverrideKey>& override_keys();

/// Applies `value` (parsed as JSON when possible, otherwise taken as a
/// string) at the path of `flag`. Throws ConfigError for unknown flags.
void apply_override(nlohmann::json& config, std::string_view flag, std::string_view value);

/// Defaults, then the file (if any), then the overrides in order.
[[nodiscard]] RunConfig load_run_config(
    const std::optional<std::filesystem::path>& file,
    const std::vector<std::pair<std::string, std::string>>& overrides);

struct ResolvedDataset {
  data::DatasetSchema schema;
  std::filesystem::path schema_path;
  std::filesystem::path csv_path;
};

/// Schema and CSV locations for a config. Throws ConfigError when the
/// schema cannot be read.
[[nodiscard]] ResolvedDataset resolve_dataset(const RunConfig& config);

/// Loads the CSV; DataError when it is missing or malformed.
[[nodiscard]] data::Dataset load_dataset(const RunConfig& config,
                                         const data::WarningSink& warn = data::stderr_warning);

}  // namespace mvqc::cli
