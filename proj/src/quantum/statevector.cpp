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

#include "mvqc/quantum/statevector.hpp"

#include <cmath>
#include <string>

#include "mvqc/error.hpp"
#include "mvqc/quantum/kernels.hpp"

namespace mvqc::quantum {
namespace {

void check_qubit_count(std::size_t n_qubits) {
  if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
    throw ConfigError("unsupported qubit count " + std::to_string(n_qubits) + " (expected " +
                      std::to_string(kMinQubits) + ".." + std::to_string(kMaxQubits) + ")");
  }
}

}  // namespace

GateOp GateOp::fixed(GateKind kind, std::size_t target, double angle) {
  GateOp g;
  g.kind = kind;
  g.target = target;
  g.source = AngleSource::Fixed;
  g.angle = angle;
  return g;
}

GateOp GateOp::trainable(GateKind kind, std::size_t target, std::size_t param_id) {
  GateOp g;
  g.kind = kind;
  g.target = target;
  g.source = AngleSource::Param;
  g.index = param_id;
  return g;
}

GateOp GateOp::encoded(GateKind kind, std::size_t target, std::size_t feature_id) {
  GateOp g;
  g.kind = kind;
  g.target = target;
  g.source = AngleSource::Feature;
  g.index = feature_id;
  return g;
}

GateOp GateOp::cnot(std::size_t control, std::size_t target) {
  GateOp g;
  g.kind = GateKind::CNOT;
  g.target = target;
  g.control = control;
  return g;
}

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = Amplitude{1.0, 0.0};
}

Statevector::Statevector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ConfigError("amplitude vector length " + std::to_string(dim) +
                      " is not a power of two >= 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) {
    ++n;
  }
  check_qubit_count(n);
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) {
    acc += std::norm(a);
  }
  return acc;
}

Statevector new_zero_state(std::size_t n_qubits) { return Statevector(n_qubits); }

void validate_gate(const GateOp& gate, std::size_t n_qubits) {
  if (gate.target >= n_qubits) {
    throw IndexError("gate target " + std::to_string(gate.target) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
  }
  if (gate.kind == GateKind::CNOT) {
    if (!gate.control) {
      throw IndexError("CNOT without control qubit");
    }
    if (*gate.control >= n_qubits) {
      throw IndexError("CNOT control " + std::to_string(*gate.control) + " out of range for " +
                       std::to_string(n_qubits) + " qubits");
    }
    if (*gate.control == gate.target) {
      throw IndexError("CNOT control equals target (" + std::to_string(gate.target) + ")");
    }
  } else if (gate.control) {
    throw IndexError("rotation gate carries a control qubit");
  }
}

void apply_gate(Statevector& state, const GateOp& gate, double resolved_angle) {
  const std::size_t n = state.n_qubits();
  validate_gate(gate, n);
  const auto& k = kernels::active_kernels();
  Amplitude* amps = state.amplitudes().data();
  if (gate.kind == GateKind::CNOT) {
    k.cnot(amps, n, *gate.control, gate.target);
    return;
  }
  const double c = std::cos(0.5 * resolved_angle);
  const double s = std::sin(0.5 * resolved_angle);
  switch (gate.kind) {
    case GateKind::RX:
      k.rx(amps, n, gate.target, c, s);
      break;
    case GateKind::RY:
      k.ry(amps, n, gate.target, c, s);
      break;
    case GateKind::RZ:
      k.rz(amps, n, gate.target, c, s);
      break;
    case GateKind::CNOT:
      break;
  }
}

Statevector applied(Statevector state, const GateOp& gate, double resolved_angle) {
  apply_gate(state, gate, resolved_angle);
  return state;
}

double expectation_z(const Statevector& state, std::size_t qubit) {
  if (qubit >= state.n_qubits()) {
    throw IndexError("measured qubit " + std::to_string(qubit) + " out of range for " +
                     std::to_string(state.n_qubits()) + " qubits");
  }
  return kernels::active_kernels().expectation_z(state.amplitudes().data(), state.n_qubits(),
                                                 qubit);
}

std::vector<double> expectations_z(const Statevector& state, std::span<const std::size_t> qubits) {
  std::vector<double> out;
  out.reserve(qubits.size());
  for (std::size_t q : qubits) {
    out.push_back(expectation_z(state, q));
  }
  return out;
}

double resolve_angle(const GateOp& gate, std::span<const double> params,
                     std::span<const double> features) {
  switch (gate.source) {
    case AngleSource::None:
      return 0.0;
    case AngleSource::Fixed:
      return gate.angle;
    case AngleSource::Param:
      if (gate.index >= params.size()) {
        throw ModelDefinitionError("gate references parameter " + std::to_string(gate.index) +
                                   " but only " + std::to_string(params.size()) +
                                   " are bound");
      }
      return params[gate.index];
    case AngleSource::Feature:
      if (gate.index >= features.size()) {
        throw ModelDefinitionError("gate references feature " + std::to_string(gate.index) +
                                   " but only " + std::to_string(features.size()) +
                                   " are bound");
      }
      return features[gate.index];
  }
  return 0.0;
}

Statevector run_circuit(std::size_t n_qubits, std::span<const GateOp> gates,
                        std::span<const double> params, std::span<const double> features) {
  Statevector state(n_qubits);
  for (const auto& gate : gates) {
    if (gate.is_rotation() && gate.source == AngleSource::None) {
      throw ModelDefinitionError("rotation gate without an angle source");
    }
    apply_gate(state, gate, resolve_angle(gate, params, features));
  }
  return state;
}

}  // namespace mvqc::quantum
