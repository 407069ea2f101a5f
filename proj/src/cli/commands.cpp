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

#include "mvqc/cli/commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mvqc/baseline/logreg.hpp"
#include "mvqc/error.hpp"
#include "mvqc/model/serialization.hpp"
#include "mvqc/training/sweep.hpp"
#include "mvqc/training/trainer.hpp"

namespace mvqc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string general10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

data::WarningSink warn_to(std::ostream& err) {
  return [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };
}

struct SplitScore {
  std::string name;
  training::Evaluation eval;
};

std::string metrics_csv(const std::vector<SplitScore>& rows) {
  std::ostringstream out;
  out << "split,loss,precision,recall,f1,tp,fp,fn,tn\n";
  for (const auto& r : rows) {
    const auto& m = r.eval.metrics;
    const auto& c = r.eval.counts;
    out << r.name << ',' << general10(r.eval.loss) << ',' << fixed6(m.precision) << ','
        << fixed6(m.recall) << ',' << fixed6(m.f1) << ',' << c.tp << ',' << c.fp << ',' << c.fn
        << ',' << c.tn << '\n';
  }
  return out.str();
}

void print_metrics(std::ostream& out, const std::vector<SplitScore>& rows) {
  out << std::left << std::setw(12) << "split" << std::setw(11) << "precision" << std::setw(11)
      << "recall" << std::setw(11) << "f1" << "loss\n";
  for (const auto& r : rows) {
    const auto& m = r.eval.metrics;
    out << std::left << std::setw(12) << r.name << std::setw(11) << fixed6(m.precision)
        << std::setw(11) << fixed6(m.recall) << std::setw(11) << fixed6(m.f1)
        << general10(r.eval.loss) << '\n';
  }
}

std::vector<SplitScore> score_all(const model::MultiVqcModel& model,
                                  const gradients::ParamStore& params,
                                  const data::SplitDataset& split,
                                  const training::ClassWeights& weights) {
  return {{"train", training::evaluate(model, params, split.train, weights)},
          {"validation", training::evaluate(model, params, split.validation, weights)},
          {"test", training::evaluate(model, params, split.test, weights)}};
}

json split_json(const data::SplitDataset& split) {
  return {{"seed", split.seed},
          {"fractions",
           {{"train", split.fractions.train},
            {"validation", split.fractions.validation},
            {"test", split.fractions.test}}},
          {"sizes", {split.train.size(), split.validation.size(), split.test.size()}}};
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DataError*>(&e) != nullptr) {
    return kExitData;
  }
  if (dynamic_cast<const NumericalError*>(&e) != nullptr) {
    return kExitNumerical;
  }
  return kExitConfig;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fs::filesystem_error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

std::vector<std::size_t> parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ConfigError("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = number(text.substr(dots + 2));
    if (lo > hi) {
      throw ConfigError("empty range '" + std::string(text) + "'");
    }
    for (std::size_t v = lo; v <= hi; ++v) {
      out.push_back(v);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(number(text.substr(start, end - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw ConfigError("failed writing " + path.string());
  }
}

std::vector<PcaRow> pca_report(const data::Dataset& dataset, const data::WarningSink& warn) {
  const auto scaler = data::MinMaxScaler::fit(dataset.features, warn);
  const auto scaled = scaler.transform(dataset.features);
  const auto pca = data::fit_pca(scaled, scaled.cols);
  const auto cum = data::cumulative(pca.explained_variance_ratio);
  std::vector<PcaRow> rows;
  for (std::size_t k = 0; k < pca.n_components(); ++k) {
    rows.push_back({k + 1, pca.explained_variance[k], pca.explained_variance_ratio[k], cum[k]});
  }
  return rows;
}

PreparedData prepare_data(const RunConfig& config, std::size_t n_components,
                          const data::WarningSink& warn) {
  PreparedData out{.raw = load_dataset(config, warn),
                   .split = {},
                   .pipeline = data::PreprocessingPipeline(
                       data::PipelineConfig{n_components, config.angle_range}, warn),
                   .processed = {}};
  if (n_components > out.raw.n_features()) {
    throw ConfigError("n_components " + std::to_string(n_components) + " exceeds the " +
                      std::to_string(out.raw.n_features()) + " features of " + out.raw.name);
  }
  out.split = data::stratified_split(out.raw, config.split, config.resolved_split_seed());
  out.processed = data::preprocess(out.split, out.pipeline);
  return out;
}

int cmd_pca_report(const RunConfig& config, const CommandContext& ctx) {
  const auto dataset = load_dataset(config, warn_to(ctx.err));
  const auto rows = pca_report(dataset, warn_to(ctx.err));
  std::ostringstream csv;
  csv << "component,explained_variance,ratio,cumulative\n";
  ctx.out << dataset.name << ": " << dataset.size() << " rows, " << dataset.n_features()
          << " features\n";
  ctx.out << std::left << std::setw(11) << "component" << std::setw(12) << "ratio"
          << "cumulative\n";
  for (const auto& r : rows) {
    csv << r.component << ',' << general10(r.explained_variance) << ',' << general10(r.ratio)
        << ',' << general10(r.cumulative) << '\n';
    ctx.out << std::left << std::setw(11) << r.component << std::setw(12) << fixed6(r.ratio)
            << fixed6(r.cumulative) << '\n';
  }
  const fs::path dir(config.output_dir);
  write_file(dir / "pca_report.csv", csv.str());
  json rows_json = json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"component", r.component},
                         {"explained_variance", r.explained_variance},
                         {"ratio", r.ratio},
                         {"cumulative", r.cumulative}});
  }
  write_file(dir / "pca_report.json",
             dump({{"run_config", config.to_json()}, {"dataset", dataset.name}, {"rows", rows_json}}));
  return kExitOk;
}

int cmd_train(const RunConfig& config, const CommandContext& ctx) {
  auto prepared = prepare_data(config, config.n_components, warn_to(ctx.err));
  const auto model_config = config.model_config();
  model::require_valid(model_config);

  json search_json = nullptr;
  training::TrainReport report;
  if (config.layer_search) {
    auto search =
        training::select_layers(model_config, prepared.processed, config.train, config.search);
    ctx.err << "layer search: chose " << search.chosen_layers << " (" << search.stop_reason
            << ")\n";
    search_json = {{"tried_layer_counts", search.tried_layer_counts},
                   {"validation_losses", search.validation_losses},
                   {"chosen_layers", search.chosen_layers},
                   {"stop_reason", search.stop_reason}};
    report = std::move(search.best);
  } else {
    report = training::train(model_config, prepared.processed, config.train);
  }

  const model::MultiVqcModel model(report.model);
  const auto params = model.make_params(report.final_params);
  const auto scores = score_all(model, params, prepared.processed, report.weights);

  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  model::SavedModel saved{report.model, report.final_params,
                          {{"run_config", config.to_json()},
                           {"seed", config.train.seed},
                           {"split", split_json(prepared.split)},
                           {"pipeline", prepared.pipeline.to_json()},
                           {"class_weights",
                            {{"class0", report.weights.class0},
                             {"class1", report.weights.class1}}}}};
  model::save_model(dir / "model.json", saved);
  write_file(dir / "train_report.json", dump({{"run_config", config.to_json()},
                                              {"split", split_json(prepared.split)},
                                              {"layer_search", search_json},
                                              {"report", report.to_json()}}));
  write_file(dir / "metrics.csv", metrics_csv(scores));
  print_metrics(ctx.out, scores);
  return kExitOk;
}

int cmd_eval(const RunConfig& config, const fs::path& model_path, const CommandContext& ctx) {
  const auto saved = model::load_model(model_path);
  if (!saved.metadata.contains("run_config") || !saved.metadata.contains("pipeline")) {
    throw ConfigError(model_path.string() + " lacks the run_config/pipeline metadata of a trained model");
  }
  auto trained = RunConfig::from_json(saved.metadata.at("run_config"));
  trained.output_dir = config.output_dir;
  const auto pipeline = data::PreprocessingPipeline::from_json(saved.metadata.at("pipeline"));
  const auto raw = load_dataset(trained, warn_to(ctx.err));
  const auto split = data::stratified_split(raw, trained.split, trained.resolved_split_seed());
  data::SplitDataset processed = split;
  processed.train = pipeline.transform(split.train);
  processed.validation = pipeline.transform(split.validation);
  processed.test = pipeline.transform(split.test);

  const auto& w = saved.metadata.at("class_weights");
  const training::ClassWeights weights{w.at("class0").get<double>(), w.at("class1").get<double>()};
  const model::MultiVqcModel model(saved.config);
  const auto params = model.make_params(saved.params);
  const auto scores = score_all(model, params, processed, weights);
  write_file(fs::path(config.output_dir) / "eval_metrics.csv", metrics_csv(scores));
  print_metrics(ctx.out, scores);
  return kExitOk;
}

int cmd_baseline(const RunConfig& config, const CommandContext& ctx) {
  const auto prepared = prepare_data(config, config.n_components, warn_to(ctx.err));
  const auto weights = training::compute_class_weights(prepared.processed.train.labels);
  const auto fit = baseline::fit_logreg(prepared.processed, weights, config.train);
  std::vector<SplitScore> scores;
  for (const auto& [name, d] :
       {std::pair<std::string, const data::Dataset*>{"train", &prepared.processed.train},
        {"validation", &prepared.processed.validation},
        {"test", &prepared.processed.test}}) {
    training::Evaluation e;
    e.predictions = baseline::predict_all(fit.model, *d);
    e.counts = metrics::confusion(e.predictions, d->labels);
    e.metrics = metrics::compute_metrics(e.counts);
    e.loss = baseline::logreg_loss(fit.model, *d, weights);
    scores.push_back({name, std::move(e)});
  }
  const fs::path dir(config.output_dir);
  write_file(dir / "baseline_report.json",
             dump({{"run_config", config.to_json()},
                   {"split", split_json(prepared.split)},
                   {"class_weights", {{"class0", weights.class0}, {"class1", weights.class1}}},
                   {"model", fit.model.to_json()},
                   {"best_epoch", fit.best_epoch},
                   {"stopped_early", fit.stopped_early},
                   {"train_loss", fit.train_loss},
                   {"validation_loss", fit.validation_loss}}));
  write_file(dir / "baseline_metrics.csv", metrics_csv(scores));
  print_metrics(ctx.out, scores);
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, const SweepArgs& args, const CommandContext& ctx) {
  if (args.features.empty() || args.vqcs.empty()) {
    throw ConfigError("sweep needs at least one feature count and one VQC count");
  }
  training::SweepGrid grid;
  grid.n_vqcs = args.vqcs;
  grid.n_classes = config.model.n_classes;
  grid.rescale = config.model.rescale;
  grid.layer_search = config.search;
  grid.include_logreg = args.include_logreg;

  const fs::path dir(config.output_dir);
  const fs::path cell_dir = dir / "sweep_cells";
  json run_json = config.to_json();
  // Workers do not change results, so they are left out of the audit key.
  json sweep_json = {{"features", args.features}, {"grid", grid.to_json()}};

  std::vector<training::SweepRow> all;
  std::size_t ok = 0;
  for (std::size_t f : args.features) {
    auto prepared = prepare_data(config, f, warn_to(ctx.err));
    const json key = {{"run_config", run_json}, {"grid", grid.to_json()}, {"n_features", f}};
    auto marker = [&](std::size_t cell) {
      return cell_dir / ("f" + std::to_string(f) + "_cell" + std::to_string(cell) + ".json");
    };
    training::SweepOptions options;
    options.workers = args.workers;
    options.load_completed = [&](std::size_t cell) -> std::optional<training::SweepRow> {
      const auto path = marker(cell);
      if (!fs::exists(path)) {
        return std::nullopt;
      }
      std::ifstream in(path);
      json j = json::parse(in, nullptr, false);
      if (j.is_discarded() || !j.contains("key") || j.at("key") != key) {
        return std::nullopt;
      }
      return training::SweepRow::from_json(j.at("row"));
    };
    const std::size_t total = grid.cells() + (grid.include_logreg ? 1 : 0);
    options.on_row = [&](const training::SweepRow& row) {
      write_file(marker(row.cell_index), dump({{"key", key}, {"row", row.to_json()}}));
      ctx.err << "feat " << f << " cell " << row.cell_index + 1 << "/" << total << " "
              << (row.failed ? "failed: " + row.error : "val F1 " + fixed6(row.validation.f1))
              << '\n';
    };
    auto rows = training::sweep(grid, prepared.processed, config.train, options);
    for (auto& r : rows) {
      ok += r.failed ? 0 : 1;
      all.push_back(std::move(r));
    }
  }

  const auto ranked = training::rank(std::move(all));
  std::ostringstream csv;
  training::write_rows_csv(csv, ranked);
  write_file(dir / "sweep_results.csv", csv.str());
  std::ostringstream summary;
  training::write_rows_csv(summary, training::best_by_group(ranked));
  write_file(dir / "sweep_summary.csv", summary.str());
  json rows_json = json::array();
  for (const auto& r : ranked) {
    rows_json.push_back(r.to_json());
  }
  write_file(dir / "sweep_results.json",
             dump({{"run_config", run_json}, {"sweep", sweep_json}, {"rows", rows_json}}));

  ctx.out << ranked.size() << " cells, " << ok << " succeeded\n";
  std::size_t shown = 0;
  for (const auto& r : ranked) {
    if (r.failed || shown == 5) {
      break;
    }
    ctx.out << "  " << r.model << " feat=" << r.spec.n_features << " vqcs=" << r.spec.n_vqcs;
    if (r.model == "mvqc") {
      ctx.out << " enc=" << circuit::to_string(r.spec.encoding)
              << " reup=" << (r.spec.reuploading ? "true" : "false")
              << " ansatz=" << circuit::to_string(r.spec.ansatz) << " layers=" << r.spec.n_layers;
    }
    ctx.out << " val_f1=" << fixed6(r.validation.f1) << " test_f1=" << fixed6(r.test.f1) << '\n';
    ++shown;
  }
  if (ok == 0) {
    ctx.err << "every sweep cell failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace mvqc::cli
