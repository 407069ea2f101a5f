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
 * @file pca.hpp
 * Principal component analysis through a cyclic Jacobi eigensolver on the
 * sample covariance matrix. Intended for the small widths used here
 * (tens of features).
 */
#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "mvqc/data/dataset.hpp"

namespace mvqc::data {

struct SymmetricEigen {
  std::vector<double> values;  ///< unsorted, as produced by the sweeps
  Matrix vectors;              ///< column j is the eigenvector of values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal mass drops below
/// `tolerance` relative to the Frobenius norm.
[[nodiscard]] SymmetricEigen jacobi_eigen(const Matrix& symmetric, double tolerance = 1e-15,
                                          int max_sweeps = 100);

/// Column means and the (N-1)-normalized covariance.
[[nodiscard]] Matrix covariance(const Matrix& samples, std::vector<double>* means = nullptr);

struct PcaModel {
  std::vector<double> mean;
  Matrix components;  ///< K x D, orthonormal rows, largest-magnitude entry positive
  std::vector<double> explained_variance;
  std::vector<double> explained_variance_ratio;

  [[nodiscard]] std::size_t n_components() const { return components.rows; }
  [[nodiscard]] std::size_t n_inputs() const { return components.cols; }

  /// (x - mean) * components^T. Throws DataError on width mismatch.
  [[nodiscard]] Matrix transform(const Matrix& samples) const;
  [[nodiscard]] Matrix inverse_transform(const Matrix& projected) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static PcaModel from_json(const nlohmann::json& j);
};

/// Throws DataError unless k <= D and N > k.
[[nodiscard]] PcaModel fit_pca(const Matrix& train, std::size_t k);

/// Cumulative sums of the explained variance ratios.
[[nodiscard]] std::vector<double> cumulative(const std::vector<double>& ratios);

}  // namespace mvqc::data
