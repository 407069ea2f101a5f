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

// Scalar reference kernels. The arithmetic is written out per component in
// the exact form the SIMD variants evaluate, so results match bit for bit.

#include "mvqc/quantum/kernels.hpp"

namespace mvqc::quantum::kernels {
namespace {

void rx_scalar(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  const double ms = -s;
  auto* d = reinterpret_cast<double*>(amps);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      double* a0 = d + 2 * (base + j);
      double* a1 = d + 2 * (base + j + stride);
      const double re0 = a0[0], im0 = a0[1], re1 = a1[0], im1 = a1[1];
      a0[0] = c * re0 + s * im1;
      a0[1] = c * im0 + ms * re1;
      a1[0] = c * re1 + s * im0;
      a1[1] = c * im1 + ms * re0;
    }
  }
}

void ry_scalar(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  const double ms = -s;
  auto* d = reinterpret_cast<double*>(amps);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      double* a0 = d + 2 * (base + j);
      double* a1 = d + 2 * (base + j + stride);
      const double re0 = a0[0], im0 = a0[1], re1 = a1[0], im1 = a1[1];
      a0[0] = c * re0 + ms * re1;
      a0[1] = c * im0 + ms * im1;
      a1[0] = c * re1 + s * re0;
      a1[1] = c * im1 + s * im0;
    }
  }
}

void rz_scalar(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c, double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  const double ms = -s;
  auto* d = reinterpret_cast<double*>(amps);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      double* a0 = d + 2 * (base + j);
      double* a1 = d + 2 * (base + j + stride);
      const double re0 = a0[0], im0 = a0[1], re1 = a1[0], im1 = a1[1];
      // e^{-i t/2} on |0>, e^{+i t/2} on |1>
      a0[0] = c * re0 + s * im0;
      a0[1] = c * im0 + ms * re0;
      a1[0] = c * re1 + ms * im1;
      a1[1] = c * im1 + s * re1;
    }
  }
}

void cnot_scalar(Amplitude* amps, std::size_t n_qubits, std::size_t control, std::size_t target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cmask = std::size_t{1} << bit_of(n_qubits, control);
  const std::size_t tmask = std::size_t{1} << bit_of(n_qubits, target);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) != 0 && (i & tmask) == 0) {
      std::swap(amps[i], amps[i | tmask]);
    }
  }
}

double expectation_z_scalar(const Amplitude* amps, std::size_t n_qubits, std::size_t qubit) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t mask = std::size_t{1} << bit_of(n_qubits, qubit);
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double p = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    if ((i & mask) == 0) {
      p0 += p;
    } else {
      p1 += p;
    }
  }
  return p0 - p1;
}

constexpr KernelTable kScalarTable{
    Backend::Scalar, "scalar", rx_scalar, ry_scalar, rz_scalar, cnot_scalar, expectation_z_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace mvqc::quantum::kernels
