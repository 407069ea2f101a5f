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
 * @file templates.hpp
 * Gate-list builders for angle encoding and the two entangling ansatz
 * families. Builders emit symbolic references: encoding gates point at a
 * feature_id, trainable rotations at a param_id. Param ids are contiguous
 * from 0 across the layers of one VQC.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mvqc/quantum/statevector.hpp"

namespace mvqc::circuit {

enum class EncodingAxis { RX, RY };

enum class AnsatzKind { BasicEntangling, StronglyEntangling };

struct VqcConfig {
  std::size_t n_qubits = 2;
  EncodingAxis encoding = EncodingAxis::RX;
  AnsatzKind ansatz = AnsatzKind::BasicEntangling;
  std::size_t n_layers = 1;
  bool reuploading = false;
  std::size_t n_measured = 2;

  /// Throws ConfigError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const VqcConfig&, const VqcConfig&) = default;
};

/// One VQC as an executable gate list.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<quantum::GateOp> gates;
  std::size_t n_params = 0;
  std::size_t n_encoding_blocks = 0;
};

/// Trainable parameters introduced per layer.
[[nodiscard]] std::size_t params_per_layer(AnsatzKind ansatz, std::size_t n_qubits);

[[nodiscard]] std::size_t parameter_count(AnsatzKind ansatz, std::size_t n_layers,
                                          std::size_t n_qubits);

/// One RX or RY per qubit; qubit q reads feature q.
[[nodiscard]] std::vector<quantum::GateOp> build_encoding(const VqcConfig& config);

/// RX on every qubit, then the CNOT ring q -> (q+1) mod n.
[[nodiscard]] std::vector<quantum::GateOp> build_basic_entangling_layer(std::size_t n_qubits,
                                                                        std::size_t layer_index);

/// RZ-RY-RZ on every qubit, then the CNOT ring q -> (q+1) mod n.
[[nodiscard]] std::vector<quantum::GateOp> build_strongly_entangling_layer(
    std::size_t n_qubits, std::size_t layer_index);

/// Encoding followed by `n_layers` ansatz layers. With reuploading the
/// encoding block is repeated before every layer.
[[nodiscard]] Circuit build_vqc(const VqcConfig& config);

[[nodiscard]] std::string_view to_string(EncodingAxis axis);
[[nodiscard]] std::string_view to_string(AnsatzKind ansatz);
[[nodiscard]] EncodingAxis parse_encoding(std::string_view text);
[[nodiscard]] AnsatzKind parse_ansatz(std::string_view text);

}  // namespace mvqc::circuit
