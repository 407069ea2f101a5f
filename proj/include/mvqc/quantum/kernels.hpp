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
 * @file kernels.hpp
 * Amplitude-update kernels behind apply_gate / expectation_z.
 *
 * A scalar reference implementation is always available. An AVX2 variant is
 * compiled on x86-64 and picked at runtime when the CPU supports it. Both
 * perform the same floating-point operations in the same order on every
 * amplitude, so gate kernels agree bit for bit; expectation_z reductions
 * may differ in the last ulp because of lane-wise summation.
 *
 * The environment variable MVQC_KERNELS=scalar|avx2 overrides the choice.
 */
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mvqc/quantum/statevector.hpp"

namespace mvqc::quantum::kernels {

enum class Backend { Scalar, Avx2 };

/// Rotation kernels receive c = cos(theta/2) and s = sin(theta/2).
struct KernelTable {
  Backend backend;
  std::string_view name;
  void (*rx)(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s);
  void (*ry)(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s);
  void (*rz)(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s);
  void (*cnot)(Amplitude* amps, std::size_t n_qubits, std::size_t control, std::size_t target);
  double (*expectation_z)(const Amplitude* amps, std::size_t n_qubits, std::size_t qubit);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

[[nodiscard]] bool backend_available(Backend backend);
[[nodiscard]] std::vector<Backend> available_backends();

const KernelTable& kernels_for(Backend backend);

/// Kernel table used by apply_gate and expectation_z.
const KernelTable& active_kernels();

/// Overrides the runtime choice. Throws ConfigError if unavailable.
void set_active_backend(Backend backend);

[[nodiscard]] std::string_view backend_name(Backend backend);

/// "scalar" or "avx2"; ConfigError otherwise.
[[nodiscard]] Backend parse_backend(std::string_view name);

/// Bit position of `qubit` in the amplitude index (qubit 0 = MSB).
constexpr std::size_t bit_of(std::size_t n_qubits, std::size_t qubit) {
  return n_qubits - 1 - qubit;
}

}  // namespace mvqc::quantum::kernels
