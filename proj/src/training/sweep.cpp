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

#include "mvqc/training/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "mvqc/baseline/logreg.hpp"
#include "mvqc/error.hpp"
#include "mvqc/util/random.hpp"

namespace mvqc::training {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

bool is_logreg(const SweepRow& r) { return r.model == "logreg"; }

}  // namespace

std::size_t SweepGrid::cells() const {
  return encodings.size() * ansatzes.size() * reuploading.size() * n_vqcs.size();
}

std::vector<model::ChainSpec> SweepGrid::enumerate(std::size_t n_features) const {
  std::vector<model::ChainSpec> specs;
  specs.reserve(cells());
  for (auto enc : encodings) {
    for (auto ansatz : ansatzes) {
      for (bool reup : reuploading) {
        for (std::size_t v : n_vqcs) {
          specs.push_back(model::ChainSpec{.n_features = n_features,
                                           .n_vqcs = v,
                                           .encoding = enc,
                                           .ansatz = ansatz,
                                           .reuploading = reup,
                                           .n_layers = 1,
                                           .n_classes = n_classes,
                                           .rescale = rescale});
        }
      }
    }
  }
  return specs;
}

nlohmann::json SweepGrid::to_json() const {
  nlohmann::json encs = nlohmann::json::array();
  for (auto e : encodings) {
    encs.push_back(std::string(circuit::to_string(e)));
  }
  nlohmann::json ans = nlohmann::json::array();
  for (auto a : ansatzes) {
    ans.push_back(std::string(circuit::to_string(a)));
  }
  nlohmann::json search = {{"max_layers", layer_search.max_layers}};
  search["patience"] = layer_search.patience ? nlohmann::json(*layer_search.patience)
                                             : nlohmann::json("n_qubits");
  return {{"encodings", encs},
          {"ansatzes", ans},
          {"reuploading", reuploading},
          {"n_vqcs", n_vqcs},
          {"n_classes", n_classes},
          {"rescale", std::string(model::to_string(rescale))},
          {"layer_search", search},
          {"include_logreg", include_logreg}};
}

nlohmann::json SweepRow::to_json() const {
  nlohmann::json j = {{"model", model},
                      {"cell", cell_index},
                      {"n_features", spec.n_features},
                      {"n_vqcs", spec.n_vqcs},
                      {"n_params", n_params},
                      {"seed", seed},
                      {"status", failed ? "failed" : "ok"},
                      {"error", error},
                      {"train", metrics_to_json(train)},
                      {"validation", metrics_to_json(validation)},
                      {"test", metrics_to_json(test)},
                      {"validation_loss", validation_loss},
                      {"detail", detail}};
  if (model == "mvqc") {
    j["encoding"] = std::string(circuit::to_string(spec.encoding));
    j["ansatz"] = std::string(circuit::to_string(spec.ansatz));
    j["reuploading"] = spec.reuploading;
    j["layers"] = spec.n_layers;
    j["n_classes"] = spec.n_classes;
    j["rescale"] = std::string(model::to_string(spec.rescale));
  }
  return j;
}

SweepRow SweepRow::from_json(const nlohmann::json& j) {
  SweepRow r;
  try {
    r.model = j.at("model").get<std::string>();
    r.cell_index = j.at("cell").get<std::size_t>();
    r.spec.n_features = j.at("n_features").get<std::size_t>();
    r.spec.n_vqcs = j.at("n_vqcs").get<std::size_t>();
    r.n_params = j.at("n_params").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.failed = j.at("status").get<std::string>() != "ok";
    r.error = j.at("error").get<std::string>();
    r.train = metrics_from_json(j.at("train"));
    r.validation = metrics_from_json(j.at("validation"));
    r.test = metrics_from_json(j.at("test"));
    r.validation_loss = j.at("validation_loss").get<double>();
    r.detail = j.at("detail");
    if (r.model == "mvqc") {
      r.spec.encoding = circuit::parse_encoding(j.at("encoding").get<std::string>());
      r.spec.ansatz = circuit::parse_ansatz(j.at("ansatz").get<std::string>());
      r.spec.reuploading = j.at("reuploading").get<bool>();
      r.spec.n_layers = j.at("layers").get<std::size_t>();
      r.spec.n_classes = j.at("n_classes").get<std::size_t>();
      r.spec.rescale = model::parse_rescale(j.at("rescale").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed sweep row: ") + e.what());
  }
  return r;
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t n_features, std::size_t cell) {
  return util::derive_seed(util::derive_seed(base, n_features), cell);
}

SweepRow run_cell(const model::ChainSpec& spec, std::size_t cell, const data::SplitDataset& data,
                  const TrainConfig& config, const LayerSearchConfig& search) {
  SweepRow row;
  row.cell_index = cell;
  row.spec = spec;
  TrainConfig cell_config = config;
  cell_config.seed = cell_seed(config.seed, spec.n_features, cell);
  row.seed = cell_config.seed;
  try {
    const auto base = model::make_chain(spec);
    auto result = select_layers(base, data, cell_config, search);
    const model::MultiVqcModel model(result.best.model);
    const auto params = model.make_params(result.best.final_params);
    const auto& w = result.best.weights;
    row.spec.n_layers = result.chosen_layers;
    row.n_params = model.n_params();
    row.train = evaluate(model, params, data.train, w).metrics;
    const auto val = evaluate(model, params, data.validation, w);
    row.validation = val.metrics;
    row.validation_loss = val.loss;
    row.test = evaluate(model, params, data.test, w).metrics;
    row.detail = result.to_json();
  } catch (const Error& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

SweepRow run_logreg_row(const data::SplitDataset& data, const TrainConfig& config) {
  SweepRow row;
  row.model = "logreg";
  row.spec.n_features = data.train.n_features();
  row.spec.n_vqcs = 0;
  row.seed = config.seed;
  try {
    const auto weights = compute_class_weights(data.train.labels);
    const auto fit = baseline::fit_logreg(data, weights, config);
    row.n_params = fit.model.weights.size() + 1;
    auto score = [&](const data::Dataset& d) {
      return metrics::evaluate(baseline::predict_all(fit.model, d), d.labels);
    };
    row.train = score(data.train);
    row.validation = score(data.validation);
    row.test = score(data.test);
    row.validation_loss = baseline::logreg_loss(fit.model, data.validation, weights);
    row.detail = {{"model", fit.model.to_json()},
                  {"best_epoch", fit.best_epoch},
                  {"stopped_early", fit.stopped_early},
                  {"train_loss", fit.train_loss},
                  {"validation_loss", fit.validation_loss}};
  } catch (const Error& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const data::SplitDataset& data,
                            const TrainConfig& config, const SweepOptions& options) {
  config.validate();
  const std::size_t n_features = data.train.n_features();
  const auto specs = grid.enumerate(n_features);
  const std::size_t n_jobs = specs.size() + (grid.include_logreg ? 1 : 0);
  std::vector<std::optional<SweepRow>> rows(n_jobs);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < n_jobs; ++i) {
    if (options.load_completed) {
      rows[i] = options.load_completed(i);
    }
    if (!rows[i]) {
      pending.push_back(i);
    }
  }

  std::mutex callback_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < pending.size(); k = next.fetch_add(1)) {
      const std::size_t i = pending[k];
      SweepRow row;
      if (i < specs.size()) {
        row = run_cell(specs[i], i, data, config, grid.layer_search);
      } else {
        TrainConfig lr_config = config;
        lr_config.seed = cell_seed(config.seed, n_features, i);
        row = run_logreg_row(data, lr_config);
        row.cell_index = i;
      }
      if (options.on_row) {
        std::lock_guard lock(callback_mutex);
        options.on_row(row);
      }
      rows[i] = std::move(row);
    }
  };

  std::size_t workers = options.workers;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = std::min(workers, pending.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::vector<SweepRow> out;
  out.reserve(n_jobs);
  for (auto& r : rows) {
    out.push_back(std::move(*r));
  }
  return out;
}

std::vector<SweepRow> rank(std::vector<SweepRow> rows) {
  auto key = [](const SweepRow& r) {
    return std::make_tuple(r.failed, -r.validation.f1, r.n_params, r.spec.n_vqcs,
                           r.spec.n_features, r.cell_index);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const SweepRow& a, const SweepRow& b) {
    if (a.failed && b.failed) {
      return std::tie(a.spec.n_features, a.cell_index) < std::tie(b.spec.n_features, b.cell_index);
    }
    return key(a) < key(b);
  });
  return rows;
}

std::vector<SweepRow> best_by_group(const std::vector<SweepRow>& ranked) {
  std::map<std::tuple<std::size_t, std::size_t, std::string>, const SweepRow*> best;
  for (const auto& r : ranked) {
    if (r.failed) {
      continue;
    }
    best.try_emplace({r.spec.n_features, r.spec.n_vqcs, r.model}, &r);
  }
  std::vector<SweepRow> out;
  for (const auto& [k, r] : best) {
    out.push_back(*r);
  }
  return out;
}

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "rank,model,feat,n_vqc,enc,reup,ansatz,layers,n_params,"
         "train_precision,train_recall,train_f1,"
         "val_precision,val_recall,val_f1,"
         "test_precision,test_recall,test_f1,"
         "val_loss,status,seed,cell,error\n";
  std::size_t position = 0;
  for (const auto& r : rows) {
    ++position;
    const bool q = !is_logreg(r);
    out << position << ',' << r.model << ',' << r.spec.n_features << ',' << r.spec.n_vqcs << ','
        << (q ? circuit::to_string(r.spec.encoding) : "-") << ','
        << (q ? (r.spec.reuploading ? "true" : "false") : "-") << ','
        << (q ? circuit::to_string(r.spec.ansatz) : "-") << ','
        << (q ? std::to_string(r.spec.n_layers) : std::string("-")) << ',' << r.n_params << ','
        << fixed(r.train.precision) << ',' << fixed(r.train.recall) << ',' << fixed(r.train.f1)
        << ',' << fixed(r.validation.precision) << ',' << fixed(r.validation.recall) << ','
        << fixed(r.validation.f1) << ',' << fixed(r.test.precision) << ','
        << fixed(r.test.recall) << ',' << fixed(r.test.f1) << ',' << general(r.validation_loss)
        << ',' << (r.failed ? "failed" : "ok") << ',' << r.seed << ',' << r.cell_index << ','
        << csv_escape(r.error) << '\n';
  }
}

}  // namespace mvqc::training
