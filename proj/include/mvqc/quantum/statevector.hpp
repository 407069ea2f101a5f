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
 * @file statevector.hpp
 * Exact statevector simulation for few-qubit circuits.
 *
 * Conventions used throughout the library:
 *  - qubit 0 is the most-significant bit of the amplitude index, so on
 *    n qubits, qubit q corresponds to bit (n - 1 - q);
 *  - rotations are R(theta) = exp(-i * theta * P / 2) for P in {X, Y, Z},
 *    hence <Z> = cos(theta) after RY(theta)|0>.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvqc::quantum {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMinQubits = 1;
inline constexpr std::size_t kMaxQubits = 8;

enum class GateKind : std::uint8_t { RX, RY, RZ, CNOT };

/// Where a rotation gate takes its angle from.
enum class AngleSource : std::uint8_t {
  None,     ///< CNOT: no angle.
  Fixed,    ///< Constant angle stored in the gate.
  Param,    ///< Trainable parameter, `index` is the param_id.
  Feature,  ///< Encoded input feature, `index` is the feature_id.
};

struct GateOp {
  GateKind kind = GateKind::RX;
  std::size_t target = 0;
  std::optional<std::size_t> control;
  AngleSource source = AngleSource::None;
  double angle = 0.0;
  std::size_t index = 0;

  static GateOp fixed(GateKind kind, std::size_t target, double angle);
  static GateOp trainable(GateKind kind, std::size_t target, std::size_t param_id);
  static GateOp encoded(GateKind kind, std::size_t target, std::size_t feature_id);
  static GateOp cnot(std::size_t control, std::size_t target);

  [[nodiscard]] bool is_rotation() const { return kind != GateKind::CNOT; }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

class Statevector {
 public:
  /// |0...0> on `n_qubits` qubits. Throws ConfigError outside [1, 8].
  explicit Statevector(std::size_t n_qubits);

  /// Takes ownership of raw amplitudes; the length must be 2^n for a
  /// supported n. The vector is not renormalized.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const { return amplitudes_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() { return amplitudes_; }
  [[nodiscard]] const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  [[nodiscard]] double norm_squared() const;

 private:
  Statevector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

  std::size_t n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

Statevector new_zero_state(std::size_t n_qubits);

/// Checks qubit indices of `gate` against `n_qubits`; throws IndexError.
void validate_gate(const GateOp& gate, std::size_t n_qubits);

/// Applies `gate` in place. `resolved_angle` is ignored for CNOT.
void apply_gate(Statevector& state, const GateOp& gate, double resolved_angle);

/// Pure variant returning the transformed copy.
[[nodiscard]] Statevector applied(Statevector state, const GateOp& gate, double resolved_angle);

/// <Z> on `qubit`, i.e. P(0) - P(1).
[[nodiscard]] double expectation_z(const Statevector& state, std::size_t qubit);

/// <Z> for each listed qubit, in the listed order.
[[nodiscard]] std::vector<double> expectations_z(const Statevector& state,
                                                 std::span<const std::size_t> qubits);

/// Angle of `gate` after binding parameters and features. Throws
/// ModelDefinitionError on dangling references.
[[nodiscard]] double resolve_angle(const GateOp& gate, std::span<const double> params,
                                   std::span<const double> features);

/// Runs `gates` on |0...0>.
[[nodiscard]] Statevector run_circuit(std::size_t n_qubits, std::span<const GateOp> gates,
                                      std::span<const double> params,
                                      std::span<const double> features);

}  // namespace mvqc::quantum
