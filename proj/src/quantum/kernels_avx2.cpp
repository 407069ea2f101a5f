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

// AVX2 kernels. A __m256d holds two complex amplitudes as
// [re_a, im_a, re_b, im_b]. When the target bit is 0 both halves of a pair
// share one register and are handled with a 128-bit lane swap.

#include "mvqc/quantum/kernels.hpp"

#if defined(MVQC_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define MVQC_AVX2 __attribute__((target("avx2")))

namespace mvqc::quantum::kernels {
namespace {

// [re, im, re', im'] -> [im, re, im', re']
MVQC_AVX2 inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// [a | b] -> [b | a]
MVQC_AVX2 inline __m256d swap_lanes(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

MVQC_AVX2 inline __m256d mul_add(__m256d a, __m256d x, __m256d b, __m256d y) {
  return _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_mul_pd(b, y));
}

MVQC_AVX2 void rx_avx2(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c,
                       double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  auto* d = reinterpret_cast<double*>(amps);
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_setr_pd(s, -s, s, -s);
  if (stride == 1) {
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, mul_add(vc, v, vs, swap_re_im(swap_lanes(v))));
    }
    return;
  }
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; j += 2) {
      double* p0 = d + 2 * (base + j);
      double* p1 = d + 2 * (base + j + stride);
      const __m256d a0 = _mm256_loadu_pd(p0);
      const __m256d a1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, mul_add(vc, a0, vs, swap_re_im(a1)));
      _mm256_storeu_pd(p1, mul_add(vc, a1, vs, swap_re_im(a0)));
    }
  }
}

MVQC_AVX2 void ry_avx2(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c,
                       double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  auto* d = reinterpret_cast<double*>(amps);
  const __m256d vc = _mm256_set1_pd(c);
  if (stride == 1) {
    const __m256d vs = _mm256_setr_pd(-s, -s, s, s);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, mul_add(vc, v, vs, swap_lanes(v)));
    }
    return;
  }
  const __m256d vps = _mm256_set1_pd(s);
  const __m256d vms = _mm256_set1_pd(-s);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; j += 2) {
      double* p0 = d + 2 * (base + j);
      double* p1 = d + 2 * (base + j + stride);
      const __m256d a0 = _mm256_loadu_pd(p0);
      const __m256d a1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, mul_add(vc, a0, vms, a1));
      _mm256_storeu_pd(p1, mul_add(vc, a1, vps, a0));
    }
  }
}

MVQC_AVX2 void rz_avx2(Amplitude* amps, std::size_t n_qubits, std::size_t target, double c,
                       double s) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << bit_of(n_qubits, target);
  auto* d = reinterpret_cast<double*>(amps);
  const __m256d vc = _mm256_set1_pd(c);
  if (stride == 1) {
    const __m256d vs = _mm256_setr_pd(s, -s, -s, s);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, mul_add(vc, v, vs, swap_re_im(v)));
    }
    return;
  }
  const __m256d vs0 = _mm256_setr_pd(s, -s, s, -s);
  const __m256d vs1 = _mm256_setr_pd(-s, s, -s, s);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; j += 2) {
      double* p0 = d + 2 * (base + j);
      double* p1 = d + 2 * (base + j + stride);
      const __m256d a0 = _mm256_loadu_pd(p0);
      const __m256d a1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, mul_add(vc, a0, vs0, swap_re_im(a0)));
      _mm256_storeu_pd(p1, mul_add(vc, a1, vs1, swap_re_im(a1)));
    }
  }
}

MVQC_AVX2 void cnot_avx2(Amplitude* amps, std::size_t n_qubits, std::size_t control,
                         std::size_t target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cbit = bit_of(n_qubits, control);
  const std::size_t tbit = bit_of(n_qubits, target);
  const std::size_t cmask = std::size_t{1} << cbit;
  const std::size_t tmask = std::size_t{1} << tbit;
  auto* d = reinterpret_cast<double*>(amps);
  for (std::size_t i = 0; i < dim; i += 2) {
    if (tbit == 0) {
      if ((i & cmask) != 0) {
        _mm256_storeu_pd(d + 2 * i, swap_lanes(_mm256_loadu_pd(d + 2 * i)));
      }
    } else if (cbit == 0) {
      // only the odd element of the pair has its control bit set
      if ((i & tmask) == 0) {
        const std::size_t j = i | tmask;
        const __m256d v0 = _mm256_loadu_pd(d + 2 * i);
        const __m256d v1 = _mm256_loadu_pd(d + 2 * j);
        _mm256_storeu_pd(d + 2 * i, _mm256_blend_pd(v0, v1, 0b1100));
        _mm256_storeu_pd(d + 2 * j, _mm256_blend_pd(v1, v0, 0b1100));
      }
    } else if ((i & cmask) != 0 && (i & tmask) == 0) {
      const std::size_t j = i | tmask;
      const __m256d v0 = _mm256_loadu_pd(d + 2 * i);
      const __m256d v1 = _mm256_loadu_pd(d + 2 * j);
      _mm256_storeu_pd(d + 2 * i, v1);
      _mm256_storeu_pd(d + 2 * j, v0);
    }
  }
}

MVQC_AVX2 double expectation_z_avx2(const Amplitude* amps, std::size_t n_qubits,
                                    std::size_t qubit) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t bit = bit_of(n_qubits, qubit);
  const std::size_t mask = std::size_t{1} << bit;
  const auto* d = reinterpret_cast<const double*>(amps);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  if (bit == 0) {
    // pair = [|..0>, |..1>]: lower lane counts +, upper lane counts -
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(d + 2 * i);
      acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    return (lanes[0] + lanes[1]) - (lanes[2] + lanes[3]);
  }
  for (std::size_t i = 0; i < dim; i += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * i);
    if ((i & mask) == 0) {
      acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v, v));
    } else {
      acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(v, v));
    }
  }
  alignas(32) double l0[4];
  alignas(32) double l1[4];
  _mm256_store_pd(l0, acc0);
  _mm256_store_pd(l1, acc1);
  return ((l0[0] + l0[1]) + (l0[2] + l0[3])) - ((l1[0] + l1[1]) + (l1[2] + l1[3]));
}

constexpr KernelTable kAvx2Table{
    Backend::Avx2, "avx2", rx_avx2, ry_avx2, rz_avx2, cnot_avx2, expectation_z_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2Table; }

}  // namespace mvqc::quantum::kernels

#else

namespace mvqc::quantum::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace mvqc::quantum::kernels

#endif
