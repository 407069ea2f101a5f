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
 * @file gradients.hpp
 * Parameter-shift gradients.
 *
 * Every rotation is generated by a Pauli/2, so for the angle t of any gate
 *   d<Z>/dt = (<Z>(t + pi/2) - <Z>(t - pi/2)) / 2
 * exactly. Within one VQC this gives the Jacobian of the measured
 * expectations with respect to both the trainable parameters and the
 * encoded inputs (a feature may feed several gates under reuploading; the
 * contributions add). A Multi-VQC loss gradient is then the chain rule
 * through those per-VQC Jacobians and the inter-VQC rescaling.
 */
#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "mvqc/circuit/templates.hpp"
#include "mvqc/gradients/param_store.hpp"
#include "mvqc/model/multivqc.hpp"
#include "mvqc/training/loss.hpp"

namespace mvqc::gradients {

inline constexpr double kParameterShift = std::numbers::pi / 2.0;

/// Jacobian of the first `n_outputs` <Z> values of one VQC.
struct VqcJacobian {
  std::size_t n_outputs = 0;
  std::size_t n_params = 0;
  std::size_t n_features = 0;
  std::vector<double> outputs;
  std::vector<double> d_params;    ///< row-major [output][param]
  std::vector<double> d_features;  ///< row-major [output][feature]; empty unless requested

  [[nodiscard]] double param(std::size_t out, std::size_t p) const {
    return d_params[out * n_params + p];
  }
  [[nodiscard]] double feature(std::size_t out, std::size_t f) const {
    return d_features[out * n_features + f];
  }
};

[[nodiscard]] VqcJacobian vqc_jacobian(const circuit::Circuit& circuit,
                                       std::span<const double> params,
                                       std::span<const double> features, std::size_t n_outputs,
                                       bool with_features = true);

/// d<Z_measured_qubit>/d params for a single circuit.
[[nodiscard]] std::vector<double> expectation_gradient(const circuit::Circuit& circuit,
                                                       std::span<const double> params,
                                                       std::span<const double> features,
                                                       std::size_t measured_qubit);

struct LossGradient {
  double loss = 0.0;
  model::ModelOutput output;
  std::vector<double> gradient;  ///< same layout as the ParamStore
};

/// Weighted cross-entropy of one sample and its gradient over every
/// parameter of every VQC. Throws NumericalError naming the VQC whose
/// backpropagated signal became non-finite.
[[nodiscard]] LossGradient loss_and_gradient(const model::MultiVqcModel& model,
                                             const ParamStore& params,
                                             std::span<const double> sample, std::size_t label,
                                             const training::ClassWeights& weights);

[[nodiscard]] std::vector<double> loss_gradient(const model::MultiVqcModel& model,
                                                const ParamStore& params,
                                                std::span<const double> sample,
                                                std::size_t label,
                                                const training::ClassWeights& weights);

inline constexpr double kFiniteDifferenceStep = 1e-5;

/// Central differences of the same loss; cross-check mode, 2 forward passes
/// per parameter.
[[nodiscard]] std::vector<double> finite_difference_loss_gradient(
    const model::MultiVqcModel& model, const ParamStore& params, std::span<const double> sample,
    std::size_t label, const training::ClassWeights& weights,
    double step = kFiniteDifferenceStep);

}  // namespace mvqc::gradients
