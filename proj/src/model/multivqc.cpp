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

#include "mvqc/model/multivqc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mvqc/error.hpp"

namespace mvqc::model {

using gradients::ParamStore;

MultiVqcConfig make_chain(const ChainSpec& spec) {
  MultiVqcConfig config;
  config.n_classes = spec.n_classes;
  config.rescale = spec.rescale;
  for (std::size_t i = 0; i < spec.n_vqcs; ++i) {
    circuit::VqcConfig vqc;
    vqc.n_qubits = spec.n_features;
    vqc.encoding = spec.encoding;
    vqc.ansatz = spec.ansatz;
    vqc.n_layers = spec.n_layers;
    vqc.reuploading = spec.reuploading;
    vqc.n_measured = (i + 1 == spec.n_vqcs) ? spec.n_classes : spec.n_features;
    config.vqcs.push_back(vqc);
  }
  return config;
}

MultiVqcConfig with_layers(MultiVqcConfig config, std::size_t n_layers) {
  for (auto& vqc : config.vqcs) {
    vqc.n_layers = n_layers;
  }
  return config;
}

std::vector<ConfigViolation> validate_config(const MultiVqcConfig& config) {
  std::vector<ConfigViolation> out;
  const std::size_t n = config.n_vqcs();
  if (n < 1 || n > kMaxVqcs) {
    out.push_back({std::nullopt, "n_vqcs must be in 1.." + std::to_string(kMaxVqcs) + ", got " +
                                     std::to_string(n)});
  }
  if (config.n_classes < 2) {
    out.push_back({std::nullopt, "n_classes must be >= 2"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& vqc = config.vqcs[i];
    try {
      vqc.validate();
    } catch (const ConfigError& e) {
      out.push_back({i, e.what()});
    }
    const bool last = i + 1 == n;
    if (!last && vqc.n_measured != vqc.n_qubits) {
      out.push_back({i, "intermediate VQC must measure every qubit (n_measured " +
                            std::to_string(vqc.n_measured) + " != n_qubits " +
                            std::to_string(vqc.n_qubits) + ")"});
    }
    if (last && vqc.n_measured != config.n_classes) {
      out.push_back({i, "final VQC must measure one qubit per class (n_measured " +
                            std::to_string(vqc.n_measured) + " != n_classes " +
                            std::to_string(config.n_classes) + ")"});
    }
    if (i > 0 && vqc.n_qubits != config.vqcs[i - 1].n_measured) {
      out.push_back({i, "input width " + std::to_string(vqc.n_qubits) +
                            " does not match previous output width " +
                            std::to_string(config.vqcs[i - 1].n_measured)});
    }
  }
  return out;
}

void require_valid(const MultiVqcConfig& config) {
  const auto violations = validate_config(config);
  if (violations.empty()) {
    return;
  }
  std::ostringstream msg;
  msg << "invalid Multi-VQC configuration:";
  for (const auto& v : violations) {
    msg << "\n  ";
    if (v.vqc_index) {
      msg << "[vqc " << *v.vqc_index << "] ";
    }
    msg << v.message;
  }
  throw ModelDefinitionError(msg.str());
}

MultiVqcModel::MultiVqcModel(MultiVqcConfig config) : config_(std::move(config)) {
  require_valid(config_);
  circuits_.reserve(config_.n_vqcs());
  for (const auto& vqc : config_.vqcs) {
    circuits_.push_back(circuit::build_vqc(vqc));
  }
}

std::size_t MultiVqcModel::n_params() const {
  std::size_t total = 0;
  for (const auto& c : circuits_) {
    total += c.n_params;
  }
  return total;
}

std::vector<std::size_t> MultiVqcModel::param_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(circuits_.size());
  for (const auto& c : circuits_) {
    counts.push_back(c.n_params);
  }
  return counts;
}

ParamStore MultiVqcModel::make_params() const { return ParamStore(param_counts()); }

ParamStore MultiVqcModel::make_params(std::vector<double> values) const {
  return ParamStore(param_counts(), std::move(values));
}

void MultiVqcModel::check_inputs(const ParamStore& params,
                                 std::span<const double> features) const {
  if (params.counts() != param_counts()) {
    throw ModelDefinitionError("parameter store layout does not match the model");
  }
  if (features.size() != n_inputs()) {
    throw ModelDefinitionError("model expects " + std::to_string(n_inputs()) +
                               " features, got " + std::to_string(features.size()));
  }
}

ForwardTrace MultiVqcModel::trace(const ParamStore& params,
                                  std::span<const double> features) const {
  check_inputs(params, features);
  ForwardTrace trace;
  trace.inputs.reserve(circuits_.size());
  trace.outputs.reserve(circuits_.size());
  std::vector<double> input(features.begin(), features.end());
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    auto output =
        measure_vqc(circuits_[i], params.vqc(i), input, config_.vqcs[i].n_measured);
    trace.inputs.push_back(std::move(input));
    if (i + 1 < circuits_.size()) {
      input.clear();
      for (double e : output) {
        input.push_back(rescale(config_.rescale, e));
      }
    }
    trace.outputs.push_back(std::move(output));
  }
  trace.output = make_output(trace.outputs.back());
  return trace;
}

ModelOutput MultiVqcModel::forward(const ParamStore& params,
                                   std::span<const double> features) const {
  check_inputs(params, features);
  std::vector<double> input(features.begin(), features.end());
  std::vector<double> output;
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    output = measure_vqc(circuits_[i], params.vqc(i), input, config_.vqcs[i].n_measured);
    if (i + 1 < circuits_.size()) {
      input.resize(output.size());
      std::transform(output.begin(), output.end(), input.begin(),
                     [mode = config_.rescale](double e) { return rescale(mode, e); });
    }
  }
  return make_output(std::move(output));
}

ModelOutput forward(const MultiVqcConfig& config, const ParamStore& params,
                    std::span<const double> features) {
  return MultiVqcModel(config).forward(params, features);
}

std::vector<double> measure_vqc(const circuit::Circuit& circuit, std::span<const double> params,
                                std::span<const double> features, std::size_t n_measured) {
  const auto state = quantum::run_circuit(circuit.n_qubits, circuit.gates, params, features);
  std::vector<double> out(n_measured);
  for (std::size_t q = 0; q < n_measured; ++q) {
    out[q] = quantum::expectation_z(state, q);
  }
  return out;
}

double rescale(RescaleMode mode, double expectation) {
  switch (mode) {
    case RescaleMode::Pi:
      return expectation * std::numbers::pi;
    case RescaleMode::ArcCos:
      return std::acos(std::clamp(expectation, -1.0, 1.0));
    case RescaleMode::Identity:
      return expectation;
  }
  return expectation;
}

double rescale_derivative(RescaleMode mode, double expectation) {
  switch (mode) {
    case RescaleMode::Pi:
      return std::numbers::pi;
    case RescaleMode::ArcCos: {
      const double e = std::clamp(expectation, -1.0, 1.0);
      return -1.0 / std::sqrt(1.0 - e * e);  // infinite at |e| = 1
    }
    case RescaleMode::Identity:
      return 1.0;
  }
  return 1.0;
}

std::vector<double> softmax(std::span<const double> scores) {
  std::vector<double> out(scores.size());
  if (scores.empty()) {
    return out;
  }
  const double top = *std::max_element(scores.begin(), scores.end());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out[i] = std::exp(scores[i] - top);
    total += out[i];
  }
  for (double& p : out) {
    p /= total;
  }
  return out;
}

std::size_t argmax(std::span<const double> values) {
  return static_cast<std::size_t>(std::distance(
      values.begin(), std::max_element(values.begin(), values.end())));
}

ModelOutput make_output(std::vector<double> class_scores) {
  ModelOutput out;
  out.probabilities = softmax(class_scores);
  out.predicted_class = argmax(out.probabilities);
  out.class_scores = std::move(class_scores);
  return out;
}

std::string_view to_string(RescaleMode mode) {
  switch (mode) {
    case RescaleMode::Pi:
      return "pi";
    case RescaleMode::ArcCos:
      return "arccos";
    case RescaleMode::Identity:
      return "identity";
  }
  return "pi";
}

RescaleMode parse_rescale(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "pi") {
    return RescaleMode::Pi;
  }
  if (t == "arccos" || t == "acos") {
    return RescaleMode::ArcCos;
  }
  if (t == "identity" || t == "none") {
    return RescaleMode::Identity;
  }
  throw ConfigError("unknown rescale mode '" + std::string(text) +
                    "' (expected pi, arccos or identity)");
}

}  // namespace mvqc::model
