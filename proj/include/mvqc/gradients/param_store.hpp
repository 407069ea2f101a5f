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

#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mvqc/error.hpp"

namespace mvqc::gradients {

/// Flat trainable-parameter vector shared by all VQCs of a model. VQC i
/// owns the contiguous block [offset(i), offset(i) + count(i)).
class ParamStore {
 public:
  ParamStore() = default;

  explicit ParamStore(std::vector<std::size_t> counts)
      : ParamStore(counts, std::vector<double>(std::accumulate(counts.begin(), counts.end(),
                                                               std::size_t{0}),
                                               0.0)) {}

  ParamStore(std::vector<std::size_t> counts, std::vector<double> values)
      : counts_(std::move(counts)), values_(std::move(values)) {
    offsets_.reserve(counts_.size());
    std::size_t total = 0;
    for (std::size_t c : counts_) {
      offsets_.push_back(total);
      total += c;
    }
    if (total != values_.size()) {
      throw ModelDefinitionError("parameter vector has " + std::to_string(values_.size()) +
                                 " entries, layout expects " + std::to_string(total));
    }
  }

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::size_t n_vqcs() const { return counts_.size(); }
  [[nodiscard]] std::size_t offset(std::size_t vqc) const { return offsets_.at(vqc); }
  [[nodiscard]] std::size_t count(std::size_t vqc) const { return counts_.at(vqc); }
  [[nodiscard]] const std::vector<std::size_t>& counts() const { return counts_; }

  [[nodiscard]] std::size_t flat_index(std::size_t vqc, std::size_t param_id) const {
    if (vqc >= counts_.size() || param_id >= counts_[vqc]) {
      throw IndexError("parameter (" + std::to_string(vqc) + ", " + std::to_string(param_id) +
                       ") outside the store layout");
    }
    return offsets_[vqc] + param_id;
  }

  [[nodiscard]] std::span<const double> vqc(std::size_t i) const {
    return std::span<const double>(values_).subspan(offset(i), count(i));
  }
  [[nodiscard]] std::span<double> vqc(std::size_t i) {
    return std::span<double>(values_).subspan(offset(i), count(i));
  }

  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::span<double> values() { return values_; }
  [[nodiscard]] const std::vector<double>& vector() const { return values_; }

  friend bool operator==(const ParamStore&, const ParamStore&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> offsets_;
  std::vector<double> values_;
};

}  // namespace mvqc::gradients
