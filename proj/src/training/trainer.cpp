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

#include "mvqc/training/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mvqc/error.hpp"
#include "mvqc/gradients/gradients.hpp"
#include "mvqc/model/serialization.hpp"
#include "mvqc/training/optimizer.hpp"
#include "mvqc/util/random.hpp"

namespace mvqc::training {

namespace {

constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kShuffleStream = 1;

double l2_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    sum += x * x;
  }
  return std::sqrt(sum);
}

void check_width(const data::Dataset& d, std::size_t width, const char* split) {
  if (d.n_features() != width) {
    throw ConfigError(std::string(split) + " split has " + std::to_string(d.n_features()) +
                      " features, model expects " + std::to_string(width));
  }
  if (d.size() == 0) {
    throw DataError(std::string(split) + " split is empty");
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (max_epochs < 1) {
    throw ConfigError("train.max_epochs must be >= 1");
  }
  if (patience < 1) {
    throw ConfigError("train.patience must be >= 1");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("train.learning_rate must be positive");
  }
  if (batch_size < 1) {
    throw ConfigError("train.batch_size must be >= 1");
  }
  if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) {
    throw ConfigError("train.init_scale must be non-negative");
  }
}

nlohmann::json TrainConfig::to_json() const {
  return {{"max_epochs", max_epochs}, {"patience", patience},     {"learning_rate", learning_rate},
          {"batch_size", batch_size}, {"seed", seed},             {"init_scale", init_scale}};
}

TrainConfig TrainConfig::from_json(const nlohmann::json& j) {
  TrainConfig c;
  try {
    c.max_epochs = j.value("max_epochs", c.max_epochs);
    c.patience = j.value("patience", c.patience);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.seed = j.value("seed", c.seed);
    c.init_scale = j.value("init_scale", c.init_scale);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad train config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json metrics_to_json(const metrics::Metrics& m) {
  return {{"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"precision_undefined", m.precision_undefined},
          {"recall_undefined", m.recall_undefined},
          {"f1_undefined", m.f1_undefined}};
}

metrics::Metrics metrics_from_json(const nlohmann::json& j) {
  metrics::Metrics m;
  m.precision = j.at("precision").get<double>();
  m.recall = j.at("recall").get<double>();
  m.f1 = j.at("f1").get<double>();
  m.precision_undefined = j.value("precision_undefined", false);
  m.recall_undefined = j.value("recall_undefined", false);
  m.f1_undefined = j.value("f1_undefined", false);
  return m;
}

nlohmann::json TrainReport::to_json() const {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& e : epochs) {
    curve.push_back({{"epoch", e.epoch},
                     {"train_loss", e.train_loss},
                     {"validation_loss", e.validation_loss},
                     {"train", metrics_to_json(e.train)},
                     {"validation", metrics_to_json(e.validation)}});
  }
  return {{"train_config", config.to_json()},
          {"model", model::config_to_json(model)},
          {"class_weights", {{"class0", weights.class0}, {"class1", weights.class1}}},
          {"initial_params", initial_params},
          {"epochs", curve},
          {"best_epoch", best_epoch},
          {"stopped_early", stopped_early},
          {"final_params", final_params}};
}

Evaluation evaluate(const model::MultiVqcModel& model, const gradients::ParamStore& params,
                    const data::Dataset& data, const ClassWeights& weights) {
  Evaluation out;
  out.predictions.reserve(data.size());
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto output = model.forward(params, data.features.row(i));
    const auto label = static_cast<std::size_t>(data.labels[i]);
    total += weighted_loss(output, label, weights);
    out.predictions.push_back(static_cast<int>(output.predicted_class));
  }
  out.loss = data.size() == 0 ? 0.0 : total / static_cast<double>(data.size());
  out.counts = metrics::confusion(out.predictions, data.labels);
  out.metrics = metrics::compute_metrics(out.counts);
  return out;
}

std::vector<double> initial_params(std::size_t n_params, const TrainConfig& config) {
  util::Rng rng(util::derive_seed(config.seed, kInitStream));
  std::vector<double> values(n_params);
  for (double& v : values) {
    v = rng.uniform(0.0, config.init_scale);
  }
  return values;
}

TrainReport train(const model::MultiVqcConfig& model_config, const data::SplitDataset& data,
                  const TrainConfig& config) {
  config.validate();
  model::require_valid(model_config);
  const model::MultiVqcModel model(model_config);
  check_width(data.train, model.n_inputs(), "train");
  check_width(data.validation, model.n_inputs(), "validation");

  TrainReport report;
  report.config = config;
  report.model = model_config;
  report.weights = compute_class_weights(data.train.labels);
  report.initial_params = initial_params(model.n_params(), config);

  auto params = model.make_params(report.initial_params);
  Adam adam(params.size(), AdamConfig{.learning_rate = config.learning_rate});
  EarlyStopping stopper(config.patience);
  util::Rng shuffle_rng(util::derive_seed(config.seed, kShuffleStream));

  std::vector<std::size_t> order(data.train.size());
  std::vector<double> batch_grad(params.size());
  std::vector<double> best_params = params.vector();

  for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle_rng.shuffle(std::span<std::size_t>(order));

    std::size_t batch_index = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size, ++batch_index) {
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      std::fill(batch_grad.begin(), batch_grad.end(), 0.0);
      double batch_loss = 0.0;
      for (std::size_t k = start; k < stop; ++k) {
        const std::size_t row = order[k];
        const auto label = static_cast<std::size_t>(data.train.labels[row]);
        gradients::LossGradient g;
        try {
          g = gradients::loss_and_gradient(model, params, data.train.features.row(row), label,
                                           report.weights);
        } catch (const NumericalError& e) {
          std::ostringstream msg;
          msg << e.what() << " at epoch " << epoch << ", batch " << batch_index << ", train row "
              << row << " (parameter norm " << l2_norm(params.values()) << ")";
          throw NumericalError(msg.str());
        }
        batch_loss += g.loss;
        for (std::size_t p = 0; p < batch_grad.size(); ++p) {
          batch_grad[p] += g.gradient[p];
        }
      }
      const double scale = 1.0 / static_cast<double>(stop - start);
      batch_loss *= scale;
      bool finite = std::isfinite(batch_loss);
      for (double& g : batch_grad) {
        g *= scale;
        finite = finite && std::isfinite(g);
      }
      if (!finite) {
        std::ostringstream msg;
        msg << "non-finite loss or gradient at epoch " << epoch << ", batch " << batch_index
            << " (batch loss " << batch_loss << ", parameter norm " << l2_norm(params.values())
            << ")";
        throw NumericalError(msg.str());
      }
      adam.step(params.values(), batch_grad);
    }

    const auto train_eval = evaluate(model, params, data.train, report.weights);
    const auto val_eval = evaluate(model, params, data.validation, report.weights);
    if (!std::isfinite(train_eval.loss) || !std::isfinite(val_eval.loss)) {
      std::ostringstream msg;
      msg << "non-finite epoch loss at epoch " << epoch << " (parameter norm "
          << l2_norm(params.values()) << ")";
      throw NumericalError(msg.str());
    }
    report.epochs.push_back(EpochRecord{.epoch = epoch,
                                        .train_loss = train_eval.loss,
                                        .validation_loss = val_eval.loss,
                                        .train = train_eval.metrics,
                                        .validation = val_eval.metrics});
    if (stopper.observe(val_eval.loss)) {
      best_params = params.vector();
    }
    if (stopper.should_stop()) {
      report.stopped_early = epoch + 1 < config.max_epochs;
      break;
    }
  }

  report.best_epoch = stopper.best_epoch();
  report.final_params = std::move(best_params);
  return report;
}

nlohmann::json LayerSearchReport::to_json() const {
  return {{"tried_layer_counts", tried_layer_counts},
          {"validation_losses", validation_losses},
          {"chosen_layers", chosen_layers},
          {"stop_reason", stop_reason},
          {"best", best.to_json()}};
}

LayerSearchTrace search_layers(std::size_t patience, std::size_t max_layers,
                               const std::function<double(std::size_t)>& validation_loss) {
  if (patience < 1) {
    throw ConfigError("layer search patience must be >= 1");
  }
  if (max_layers < 1) {
    throw ConfigError("layer search max_layers must be >= 1");
  }
  LayerSearchTrace trace;
  double best = 0.0;
  std::size_t stale = 0;
  for (std::size_t layers = 1;; ++layers) {
    const double loss = validation_loss(layers);
    trace.tried_layer_counts.push_back(layers);
    trace.validation_losses.push_back(loss);
    if (trace.chosen_layers == 0 || loss < best) {
      best = loss;
      trace.chosen_layers = layers;
      stale = 0;
    } else {
      ++stale;
    }
    if (stale >= patience) {
      trace.stop_reason = "no improvement for " + std::to_string(patience) + " layer counts";
      break;
    }
    if (layers >= max_layers) {
      trace.stop_reason = "reached max_layers " + std::to_string(max_layers);
      break;
    }
  }
  return trace;
}

LayerSearchReport select_layers(const model::MultiVqcConfig& base, const data::SplitDataset& data,
                                const TrainConfig& config, const LayerSearchConfig& search) {
  model::require_valid(base);
  const std::size_t patience = search.patience.value_or(base.vqcs.front().n_qubits);
  LayerSearchReport report;
  std::optional<TrainReport> best;
  const auto trace = search_layers(patience, search.max_layers, [&](std::size_t layers) {
    auto run = train(model::with_layers(base, layers), data, config);
    const double loss = run.best_validation_loss();
    if (!best || loss < best->best_validation_loss()) {
      best = std::move(run);
    }
    return loss;
  });
  report.tried_layer_counts = trace.tried_layer_counts;
  report.validation_losses = trace.validation_losses;
  report.chosen_layers = trace.chosen_layers;
  report.stop_reason = trace.stop_reason;
  report.best = std::move(*best);
  return report;
}

}  // namespace mvqc::training
