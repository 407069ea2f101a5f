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

#include "mvqc/baseline/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mvqc/error.hpp"
#include "mvqc/training/optimizer.hpp"

namespace mvqc::baseline {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double margin(const LogRegModel& model, std::span<const double> x) {
  double z = model.bias;
  for (std::size_t i = 0; i < x.size(); ++i) {
    z += model.weights[i] * x[i];
  }
  return z;
}

double sample_loss(double p1, int label, const training::ClassWeights& weights) {
  const double p = label == 1 ? p1 : 1.0 - p1;
  return -weights[static_cast<std::size_t>(label)] *
         std::log(std::max(p, training::kProbabilityFloor));
}

}  // namespace

nlohmann::json LogRegModel::to_json() const { return {{"weights", weights}, {"bias", bias}}; }

LogRegModel LogRegModel::from_json(const nlohmann::json& j) {
  LogRegModel m;
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  return m;
}

LogRegPrediction predict_logreg(const LogRegModel& model, std::span<const double> features) {
  if (features.size() != model.weights.size()) {
    throw ConfigError("logistic regression expects " + std::to_string(model.weights.size()) +
                      " features, got " + std::to_string(features.size()));
  }
  const double p = sigmoid(margin(model, features));
  return {p >= 0.5 ? 1 : 0, p};
}

std::vector<int> predict_all(const LogRegModel& model, const data::Dataset& data) {
  std::vector<int> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.push_back(predict_logreg(model, data.features.row(i)).label);
  }
  return out;
}

double logreg_loss(const LogRegModel& model, const data::Dataset& data,
                   const training::ClassWeights& weights) {
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    total += sample_loss(predict_logreg(model, data.features.row(i)).probability, data.labels[i],
                         weights);
  }
  return data.size() == 0 ? 0.0 : total / static_cast<double>(data.size());
}

LogRegReport fit_logreg(const data::SplitDataset& data, const training::ClassWeights& weights,
                        const training::TrainConfig& config) {
  config.validate();
  const std::size_t d = data.train.n_features();
  if (data.validation.n_features() != d) {
    throw ConfigError("validation split width differs from train split");
  }
  if (data.train.size() == 0 || data.validation.size() == 0) {
    throw DataError("logistic regression needs non-empty train and validation splits");
  }

  LogRegReport report;
  LogRegModel model{std::vector<double>(d, 0.0), 0.0};
  std::vector<double> params(d + 1, 0.0);
  std::vector<double> grad(d + 1);
  training::Adam adam(d + 1, training::AdamConfig{.learning_rate = config.learning_rate});
  training::EarlyStopping stopper(config.patience);
  LogRegModel best = model;
  const double n = static_cast<double>(data.train.size());

  for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < data.train.size(); ++i) {
      const auto x = data.train.features.row(i);
      const int y = data.train.labels[i];
      const double p1 = sigmoid(margin(model, x));
      // d/dz of -w_y log p_y is w_y (p1 - y).
      const double dz = weights[static_cast<std::size_t>(y)] * (p1 - static_cast<double>(y));
      for (std::size_t k = 0; k < d; ++k) {
        grad[k] += dz * x[k] / n;
      }
      grad[d] += dz / n;
    }
    adam.step(params, grad);
    std::copy(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(d),
              model.weights.begin());
    model.bias = params[d];

    const double train_loss = logreg_loss(model, data.train, weights);
    const double val_loss = logreg_loss(model, data.validation, weights);
    if (!std::isfinite(train_loss) || !std::isfinite(val_loss)) {
      std::ostringstream msg;
      msg << "non-finite logistic regression loss at epoch " << epoch;
      throw NumericalError(msg.str());
    }
    report.train_loss.push_back(train_loss);
    report.validation_loss.push_back(val_loss);
    if (stopper.observe(val_loss)) {
      best = model;
    }
    if (stopper.should_stop()) {
      report.stopped_early = epoch + 1 < config.max_epochs;
      break;
    }
  }
  report.model = best;
  report.best_epoch = stopper.best_epoch();
  return report;
}

}  // namespace mvqc::baseline
