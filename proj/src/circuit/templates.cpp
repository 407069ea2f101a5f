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

#include "mvqc/circuit/templates.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mvqc/error.hpp"

namespace mvqc::circuit {

using quantum::GateKind;
using quantum::GateOp;

namespace {

void check_layer_width(std::size_t n_qubits) {
  if (n_qubits < 2) {
    throw ConfigError("entangling layers need at least 2 qubits, got " +
                      std::to_string(n_qubits));
  }
  if (n_qubits > quantum::kMaxQubits) {
    throw ConfigError("entangling layer width " + std::to_string(n_qubits) +
                      " exceeds the simulator limit");
  }
}

void append_cnot_ring(std::vector<GateOp>& gates, std::size_t n_qubits) {
  for (std::size_t q = 0; q < n_qubits; ++q) {
    gates.push_back(GateOp::cnot(q, (q + 1) % n_qubits));
  }
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

void VqcConfig::validate() const {
  check_layer_width(n_qubits);
  if (n_layers < 1) {
    throw ConfigError("n_layers must be >= 1");
  }
  if (n_measured < 1 || n_measured > n_qubits) {
    throw ConfigError("n_measured " + std::to_string(n_measured) + " not in 1.." +
                      std::to_string(n_qubits));
  }
}

std::size_t params_per_layer(AnsatzKind ansatz, std::size_t n_qubits) {
  return ansatz == AnsatzKind::BasicEntangling ? n_qubits : 3 * n_qubits;
}

std::size_t parameter_count(AnsatzKind ansatz, std::size_t n_layers, std::size_t n_qubits) {
  return n_layers * params_per_layer(ansatz, n_qubits);
}

std::vector<GateOp> build_encoding(const VqcConfig& config) {
  const GateKind kind = config.encoding == EncodingAxis::RX ? GateKind::RX : GateKind::RY;
  std::vector<GateOp> gates;
  gates.reserve(config.n_qubits);
  for (std::size_t q = 0; q < config.n_qubits; ++q) {
    gates.push_back(GateOp::encoded(kind, q, q));
  }
  return gates;
}

std::vector<GateOp> build_basic_entangling_layer(std::size_t n_qubits, std::size_t layer_index) {
  check_layer_width(n_qubits);
  const std::size_t first = layer_index * n_qubits;
  std::vector<GateOp> gates;
  gates.reserve(2 * n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    gates.push_back(GateOp::trainable(GateKind::RX, q, first + q));
  }
  append_cnot_ring(gates, n_qubits);
  return gates;
}

std::vector<GateOp> build_strongly_entangling_layer(std::size_t n_qubits,
                                                    std::size_t layer_index) {
  check_layer_width(n_qubits);
  const std::size_t first = layer_index * 3 * n_qubits;
  std::vector<GateOp> gates;
  gates.reserve(4 * n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t id = first + 3 * q;
    gates.push_back(GateOp::trainable(GateKind::RZ, q, id));
    gates.push_back(GateOp::trainable(GateKind::RY, q, id + 1));
    gates.push_back(GateOp::trainable(GateKind::RZ, q, id + 2));
  }
  append_cnot_ring(gates, n_qubits);
  return gates;
}

Circuit build_vqc(const VqcConfig& config) {
  config.validate();
  Circuit circuit;
  circuit.n_qubits = config.n_qubits;
  const auto encoding = build_encoding(config);
  for (std::size_t layer = 0; layer < config.n_layers; ++layer) {
    if (layer == 0 || config.reuploading) {
      circuit.gates.insert(circuit.gates.end(), encoding.begin(), encoding.end());
      ++circuit.n_encoding_blocks;
    }
    const auto block = config.ansatz == AnsatzKind::BasicEntangling
                           ? build_basic_entangling_layer(config.n_qubits, layer)
                           : build_strongly_entangling_layer(config.n_qubits, layer);
    circuit.gates.insert(circuit.gates.end(), block.begin(), block.end());
  }
  circuit.n_params = parameter_count(config.ansatz, config.n_layers, config.n_qubits);
  return circuit;
}

std::string_view to_string(EncodingAxis axis) { return axis == EncodingAxis::RX ? "RX" : "RY"; }

std::string_view to_string(AnsatzKind ansatz) {
  return ansatz == AnsatzKind::BasicEntangling ? "basic" : "strongly";
}

EncodingAxis parse_encoding(std::string_view text) {
  const auto t = lower(text);
  if (t == "rx" || t == "x") {
    return EncodingAxis::RX;
  }
  if (t == "ry" || t == "y") {
    return EncodingAxis::RY;
  }
  throw ConfigError("unknown encoding '" + std::string(text) + "' (expected RX or RY)");
}

AnsatzKind parse_ansatz(std::string_view text) {
  const auto t = lower(text);
  if (t == "basic" || t == "basicentangling" || t == "basic_entangling") {
    return AnsatzKind::BasicEntangling;
  }
  if (t == "strongly" || t == "stronglyentangling" || t == "strongly_entangling") {
    return AnsatzKind::StronglyEntangling;
  }
  throw ConfigError("unknown ansatz '" + std::string(text) + "' (expected basic or strongly)");
}

}  // namespace mvqc::circuit
