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

#include "mvqc/gradients/gradients.hpp"

#include <cmath>
#include <string>

#include "mvqc/error.hpp"

namespace mvqc::gradients {

using quantum::AngleSource;
using quantum::Statevector;

namespace {

void measure_into(const Statevector& state, std::size_t n_outputs, std::vector<double>& out) {
  out.resize(n_outputs);
  for (std::size_t q = 0; q < n_outputs; ++q) {
    out[q] = quantum::expectation_z(state, q);
  }
}

}  // namespace

VqcJacobian vqc_jacobian(const circuit::Circuit& circuit, std::span<const double> params,
                         std::span<const double> features, std::size_t n_outputs,
                         bool with_features) {
  if (n_outputs == 0 || n_outputs > circuit.n_qubits) {
    throw IndexError("cannot measure " + std::to_string(n_outputs) + " of " +
                     std::to_string(circuit.n_qubits) + " qubits");
  }
  VqcJacobian jac;
  jac.n_outputs = n_outputs;
  jac.n_params = params.size();
  jac.n_features = features.size();
  jac.d_params.assign(n_outputs * jac.n_params, 0.0);
  if (with_features) {
    jac.d_features.assign(n_outputs * jac.n_features, 0.0);
  }

  const auto& gates = circuit.gates;
  std::vector<double> angles(gates.size());
  for (std::size_t k = 0; k < gates.size(); ++k) {
    angles[k] = quantum::resolve_angle(gates[k], params, features);
  }

  // prefix holds gates [0, k) applied; each shifted run replays [k+1, end).
  Statevector prefix(circuit.n_qubits);
  std::vector<double> plus;
  std::vector<double> minus;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& gate = gates[k];
    const bool differentiate =
        gate.source == AngleSource::Param ||
        (with_features && gate.source == AngleSource::Feature);
    if (differentiate) {
      for (int sign : {+1, -1}) {
        Statevector shifted = prefix;
        quantum::apply_gate(shifted, gate, angles[k] + sign * kParameterShift);
        for (std::size_t r = k + 1; r < gates.size(); ++r) {
          quantum::apply_gate(shifted, gates[r], angles[r]);
        }
        measure_into(shifted, n_outputs, sign > 0 ? plus : minus);
      }
      const bool is_param = gate.source == AngleSource::Param;
      auto& target = is_param ? jac.d_params : jac.d_features;
      const std::size_t width = is_param ? jac.n_params : jac.n_features;
      for (std::size_t o = 0; o < n_outputs; ++o) {
        target[o * width + gate.index] += 0.5 * (plus[o] - minus[o]);
      }
    }
    quantum::apply_gate(prefix, gate, angles[k]);
  }
  measure_into(prefix, n_outputs, jac.outputs);
  return jac;
}

std::vector<double> expectation_gradient(const circuit::Circuit& circuit,
                                         std::span<const double> params,
                                         std::span<const double> features,
                                         std::size_t measured_qubit) {
  const auto jac = vqc_jacobian(circuit, params, features, measured_qubit + 1, false);
  std::vector<double> grad(jac.n_params);
  for (std::size_t p = 0; p < jac.n_params; ++p) {
    grad[p] = jac.param(measured_qubit, p);
  }
  return grad;
}

LossGradient loss_and_gradient(const model::MultiVqcModel& model, const ParamStore& params,
                               std::span<const double> sample, std::size_t label,
                               const training::ClassWeights& weights) {
  const auto trace = model.trace(params, sample);
  const auto& config = model.config();
  LossGradient result;
  result.loss = training::weighted_loss(trace.output, label, weights);
  result.output = trace.output;
  result.gradient.assign(params.size(), 0.0);

  // Upstream signal d loss / d (outputs of VQC i).
  std::vector<double> upstream =
      training::weighted_loss_score_gradient(trace.output, label, weights);
  for (std::size_t i = model.n_vqcs(); i-- > 0;) {
    const bool need_inputs = i > 0;
    const auto jac = vqc_jacobian(model.circuits()[i], params.vqc(i), trace.inputs[i],
                                  config.vqcs[i].n_measured, need_inputs);
    const std::size_t offset = params.offset(i);
    for (std::size_t p = 0; p < jac.n_params; ++p) {
      double acc = 0.0;
      for (std::size_t o = 0; o < jac.n_outputs; ++o) {
        acc += upstream[o] * jac.param(o, p);
      }
      result.gradient[offset + p] = acc;
    }
    if (!need_inputs) {
      break;
    }
    std::vector<double> next(jac.n_features, 0.0);
    for (std::size_t f = 0; f < jac.n_features; ++f) {
      double acc = 0.0;
      for (std::size_t o = 0; o < jac.n_outputs; ++o) {
        acc += upstream[o] * jac.feature(o, f);
      }
      // only multiply through the rescale slope when there is signal, so a
      // saturated arccos input with zero upstream stays finite
      next[f] = acc == 0.0 ? 0.0
                           : acc * model::rescale_derivative(config.rescale, trace.outputs[i - 1][f]);
      if (!std::isfinite(next[f])) {
        throw NumericalError("non-finite gradient flowing into VQC " + std::to_string(i - 1) +
                             " (output " + std::to_string(f) + " = " +
                             std::to_string(trace.outputs[i - 1][f]) + ")");
      }
    }
    upstream = std::move(next);
  }
  for (std::size_t k = 0; k < result.gradient.size(); ++k) {
    if (!std::isfinite(result.gradient[k])) {
      throw NumericalError("non-finite gradient for parameter " + std::to_string(k));
    }
  }
  return result;
}

std::vector<double> loss_gradient(const model::MultiVqcModel& model, const ParamStore& params,
                                  std::span<const double> sample, std::size_t label,
                                  const training::ClassWeights& weights) {
  return loss_and_gradient(model, params, sample, label, weights).gradient;
}

std::vector<double> finite_difference_loss_gradient(const model::MultiVqcModel& model,
                                                    const ParamStore& params,
                                                    std::span<const double> sample,
                                                    std::size_t label,
                                                    const training::ClassWeights& weights,
                                                    double step) {
  ParamStore probe = params;
  std::vector<double> grad(params.size());
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double original = probe.values()[k];
    probe.values()[k] = original + step;
    const double up = training::weighted_loss(model.forward(probe, sample), label, weights);
    probe.values()[k] = original - step;
    const double down = training::weighted_loss(model.forward(probe, sample), label, weights);
    probe.values()[k] = original;
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

}  // namespace mvqc::gradients
