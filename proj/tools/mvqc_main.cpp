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

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mvqc/cli/commands.hpp"
#include "mvqc/cli/run_config.hpp"
#include "mvqc/quantum/kernels.hpp"

namespace {

struct ConfigFlags {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("-c,--config", flags.config_file, "JSON run config")->check(CLI::ExistingFile);
  for (const auto& key : mvqc::cli::override_keys()) {
    cmd->add_option_function<std::string>(
        "--" + key.flag, [&flags, name = key.flag](const std::string& v) { flags.values[name] = v; },
        key.help);
  }
}

mvqc::cli::RunConfig resolve(const ConfigFlags& flags) {
  std::vector<std::pair<std::string, std::string>> overrides;
  if (const char* env = std::getenv(mvqc::cli::kOutputDirEnv); env != nullptr && *env != '\0') {
    overrides.emplace_back("output-dir", env);
  }
  for (const auto& kv : flags.values) {
    overrides.push_back(kv);
  }
  std::optional<std::filesystem::path> file;
  if (!flags.config_file.empty()) {
    file = flags.config_file;
  }
  return mvqc::cli::load_run_config(file, overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-VQC classifier: statevector simulation, training and sweeps"};
  app.require_subcommand(1);
  std::string kernels;
  app.add_option("--kernels", kernels, "statevector kernels: scalar or avx2 (default: best)");

  ConfigFlags pca_flags, train_flags, eval_flags, sweep_flags, baseline_flags;
  auto* pca = app.add_subcommand("pca-report", "explained variance per principal component");
  add_config_flags(pca, pca_flags);
  auto* train = app.add_subcommand("train", "train one Multi-VQC model");
  add_config_flags(train, train_flags);
  auto* eval = app.add_subcommand("eval", "score a saved model on its original splits");
  add_config_flags(eval, eval_flags);
  std::string model_path;
  eval->add_option("--model", model_path, "model.json written by train")
      ->required()
      ->check(CLI::ExistingFile);
  auto* sweep = app.add_subcommand("sweep", "grid sweep with per-cell layer search");
  add_config_flags(sweep, sweep_flags);
  std::string features = "2";
  std::string vqcs = "1..3";
  mvqc::cli::SweepArgs sweep_args;
  sweep->add_option("--features", features, "PCA feature counts, e.g. 2..6");
  sweep->add_option("--vqcs", vqcs, "VQC counts, e.g. 1..3");
  sweep->add_option("--workers", sweep_args.workers, "worker threads (0: all cores)");
  sweep->add_flag("--logreg", sweep_args.include_logreg, "add a logistic-regression row");
  auto* base = app.add_subcommand("baseline", "class-weighted logistic regression");
  add_config_flags(base, baseline_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mvqc::cli::kExitConfig;
  }

  const mvqc::cli::CommandContext ctx{std::cout, std::cerr};
  return mvqc::cli::run_guarded(
      [&]() -> int {
        if (!kernels.empty()) {
          mvqc::quantum::kernels::set_active_backend(mvqc::quantum::kernels::parse_backend(kernels));
        }
        if (pca->parsed()) {
          return mvqc::cli::cmd_pca_report(resolve(pca_flags), ctx);
        }
        if (train->parsed()) {
          return mvqc::cli::cmd_train(resolve(train_flags), ctx);
        }
        if (eval->parsed()) {
          return mvqc::cli::cmd_eval(resolve(eval_flags), model_path, ctx);
        }
        if (sweep->parsed()) {
          sweep_args.features = mvqc::cli::parse_range(features);
          sweep_args.vqcs = mvqc::cli::parse_range(vqcs);
          return mvqc::cli::cmd_sweep(resolve(sweep_flags), sweep_args, ctx);
        }
        return mvqc::cli::cmd_baseline(resolve(baseline_flags), ctx);
      },
      std::cerr);
}
