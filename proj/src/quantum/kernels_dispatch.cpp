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

#include <atomic>
#include <cstdlib>
#include <string>

#include "mvqc/error.hpp"
#include "mvqc/quantum/kernels.hpp"

namespace mvqc::quantum::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(MVQC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("MVQC_KERNELS")) {
    const std::string_view choice(env);
    if (choice == "scalar") {
      return &scalar_kernels();
    }
    if (choice == "avx2" && backend_available(Backend::Avx2)) {
      return avx2_kernels();
    }
  }
  if (backend_available(Backend::Avx2)) {
    return avx2_kernels();
  }
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return avx2_kernels() != nullptr && cpu_has_avx2();
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (backend_available(Backend::Avx2)) {
    out.push_back(Backend::Avx2);
  }
  return out;
}

const KernelTable& kernels_for(Backend backend) {
  if (!backend_available(backend)) {
    throw ConfigError("kernel backend '" + std::string(backend_name(backend)) +
                      "' is not available on this machine");
  }
  return backend == Backend::Avx2 ? *avx2_kernels() : scalar_kernels();
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_backend(Backend backend) {
  active_slot().store(&kernels_for(backend), std::memory_order_release);
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

Backend parse_backend(std::string_view name) {
  if (name == "scalar") {
    return Backend::Scalar;
  }
  if (name == "avx2") {
    return Backend::Avx2;
  }
  throw ConfigError("unknown kernel backend '" + std::string(name) + "'");
}

}  // namespace mvqc::quantum::kernels
