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
 * @file commands.hpp
 * Subcommands behind the mvqc executable. Each returns the process exit
 * code: 0 success, 1 configuration or model definition error, 2 data
 * error, 3 numerical failure.
 */
#pragma once

#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvqc/cli/run_config.hpp"
#include "mvqc/data/dataset.hpp"
#include "mvqc/data/split.hpp"

namespace mvqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumerical = 3;

struct CommandContext {
  std::ostream& out;
  std::ostream& err;
};

/// Exit code for an exception escaping a command.
[[nodiscard]] int exit_code_for(const std::exception& e);

/// Runs `body`, mapping library exceptions to exit codes and printing them.
[[nodiscard]] int run_guarded(const std::function<int()>& body, std::ostream& err);

/// "2..6", "2,4,5" or "3".
[[nodiscard]] std::vector<std::size_t> parse_range(std::string_view text);

struct PcaRow {
  std::size_t component = 0;  ///< 1-based
  double explained_variance = 0.0;
  double ratio = 0.0;
  double cumulative = 0.0;
};

/// Explained variance of every principal component of the min-max scaled
/// dataset (all rows).
[[nodiscard]] std::vector<PcaRow> pca_report(const data::Dataset& dataset,
                                             const data::WarningSink& warn = data::stderr_warning);

/// Raw split plus the train-fitted preprocessing.
struct PreparedData {
  data::Dataset raw;
  data::SplitDataset split;
  data::PreprocessingPipeline pipeline;
  data::SplitDataset processed;
};

[[nodiscard]] PreparedData prepare_data(const RunConfig& config, std::size_t n_components,
                                        const data::WarningSink& warn = data::stderr_warning);

struct SweepArgs {
  std::vector<std::size_t> features{2};
  std::vector<std::size_t> vqcs{1, 2, 3};
  std::size_t workers = 0;
  bool include_logreg = false;
};

int cmd_pca_report(const RunConfig& config, const CommandContext& ctx);
int cmd_train(const RunConfig& config, const CommandContext& ctx);
int cmd_eval(const RunConfig& config, const std::filesystem::path& model_path,
             const CommandContext& ctx);
int cmd_sweep(const RunConfig& config, const SweepArgs& args, const CommandContext& ctx);
int cmd_baseline(const RunConfig& config, const CommandContext& ctx);

/// Writes `text` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mvqc::cli
