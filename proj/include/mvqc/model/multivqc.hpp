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
 * @file multivqc.hpp
 * Sequential chain of VQCs. Every VQC but the last measures <Z> on all of
 * its qubits; those expectations, mapped to angles by the rescale mode,
 * are the encoded features of the next VQC. The last VQC measures one
 * qubit per class (qubits 0..n_classes-1) and the class probabilities are
 * the softmax of those expectations.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvqc/circuit/templates.hpp"
#include "mvqc/gradients/param_store.hpp"

namespace mvqc::model {

inline constexpr std::size_t kMaxVqcs = 3;

/// Expectation e in [-1, 1] -> angle fed to the next VQC.
enum class RescaleMode {
  Pi,        ///< e * pi
  ArcCos,    ///< arccos(e)
  Identity,  ///< e
};

struct MultiVqcConfig {
  std::vector<circuit::VqcConfig> vqcs;
  std::size_t n_classes = 2;
  RescaleMode rescale = RescaleMode::Pi;

  [[nodiscard]] std::size_t n_vqcs() const { return vqcs.size(); }
  [[nodiscard]] std::size_t n_inputs() const { return vqcs.empty() ? 0 : vqcs.front().n_qubits; }

  friend bool operator==(const MultiVqcConfig&, const MultiVqcConfig&) = default;
};

/// Shape shared by every VQC of a chain, the form used by the sweep grids.
struct ChainSpec {
  std::size_t n_features = 2;
  std::size_t n_vqcs = 1;
  circuit::EncodingAxis encoding = circuit::EncodingAxis::RX;
  circuit::AnsatzKind ansatz = circuit::AnsatzKind::BasicEntangling;
  bool reuploading = false;
  std::size_t n_layers = 1;
  std::size_t n_classes = 2;
  RescaleMode rescale = RescaleMode::Pi;
};

[[nodiscard]] MultiVqcConfig make_chain(const ChainSpec& spec);

/// Same chain with every VQC set to `n_layers`.
[[nodiscard]] MultiVqcConfig with_layers(MultiVqcConfig config, std::size_t n_layers);

struct ConfigViolation {
  std::optional<std::size_t> vqc_index;
  std::string message;
};

/// Every violated invariant, in VQC order. Empty means valid.
[[nodiscard]] std::vector<ConfigViolation> validate_config(const MultiVqcConfig& config);

/// Throws ModelDefinitionError listing all violations.
void require_valid(const MultiVqcConfig& config);

struct ModelOutput {
  std::vector<double> class_scores;
  std::vector<double> probabilities;
  std::size_t predicted_class = 0;
};

/// Intermediate values of one forward pass.
struct ForwardTrace {
  std::vector<std::vector<double>> inputs;   ///< angles fed to VQC i
  std::vector<std::vector<double>> outputs;  ///< <Z> measured at VQC i
  ModelOutput output;
};

class MultiVqcModel {
 public:
  explicit MultiVqcModel(MultiVqcConfig config);

  [[nodiscard]] const MultiVqcConfig& config() const { return config_; }
  [[nodiscard]] const std::vector<circuit::Circuit>& circuits() const { return circuits_; }
  [[nodiscard]] std::size_t n_vqcs() const { return circuits_.size(); }
  [[nodiscard]] std::size_t n_inputs() const { return config_.n_inputs(); }
  [[nodiscard]] std::size_t n_params() const;
  [[nodiscard]] std::vector<std::size_t> param_counts() const;

  [[nodiscard]] gradients::ParamStore make_params() const;
  [[nodiscard]] gradients::ParamStore make_params(std::vector<double> values) const;

  [[nodiscard]] ModelOutput forward(const gradients::ParamStore& params,
                                    std::span<const double> features) const;
  [[nodiscard]] ForwardTrace trace(const gradients::ParamStore& params,
                                   std::span<const double> features) const;

 private:
  void check_inputs(const gradients::ParamStore& params, std::span<const double> features) const;

  MultiVqcConfig config_;
  std::vector<circuit::Circuit> circuits_;
};

[[nodiscard]] ModelOutput forward(const MultiVqcConfig& config,
                                  const gradients::ParamStore& params,
                                  std::span<const double> features);

/// Runs one VQC and returns <Z> on qubits 0..n_measured-1.
[[nodiscard]] std::vector<double> measure_vqc(const circuit::Circuit& circuit,
                                              std::span<const double> params,
                                              std::span<const double> features,
                                              std::size_t n_measured);

[[nodiscard]] double rescale(RescaleMode mode, double expectation);
[[nodiscard]] double rescale_derivative(RescaleMode mode, double expectation);

[[nodiscard]] std::vector<double> softmax(std::span<const double> scores);
[[nodiscard]] std::size_t argmax(std::span<const double> values);

/// Builds class_scores / probabilities / predicted_class from raw scores.
[[nodiscard]] ModelOutput make_output(std::vector<double> class_scores);

[[nodiscard]] std::string_view to_string(RescaleMode mode);
[[nodiscard]] RescaleMode parse_rescale(std::string_view text);

}  // namespace mvqc::model
