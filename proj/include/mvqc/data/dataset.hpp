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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace mvqc::data {

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), values(r * c, fill) {}

  [[nodiscard]] double& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
  [[nodiscard]] std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols, cols);
  }
  [[nodiscard]] std::span<double> row(std::size_t r) {
    return std::span<double>(values).subspan(r * cols, cols);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct Dataset {
  std::string name;
  Matrix features;
  std::vector<int> labels;
  std::vector<std::string> feature_names;

  [[nodiscard]] std::size_t size() const { return labels.size(); }
  [[nodiscard]] std::size_t n_features() const { return features.cols; }
  [[nodiscard]] std::size_t count(int label) const;
  [[nodiscard]] Dataset subset(std::span<const std::size_t> indices) const;
  /// Same rows and labels with replaced feature columns.
  [[nodiscard]] Dataset with_features(Matrix features,
                                      std::vector<std::string> feature_names) const;
};

/// Declares how a CSV file maps onto a Dataset and the profile it should
/// match. Profile mismatches only warn: public copies of these datasets
/// exist in several variants.
struct DatasetSchema {
  std::string name;
  std::string file;
  std::string label_column;
  std::vector<std::string> drop_columns;
  std::map<std::string, int> label_mapping;
  std::optional<std::size_t> expected_rows;
  std::optional<std::size_t> expected_features;
  std::optional<double> expected_positive_fraction;

  static DatasetSchema from_json(const nlohmann::json& j);
  [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] DatasetSchema load_schema(const std::filesystem::path& path);

using WarningSink = std::function<void(const std::string&)>;

/// Writes "warning: <msg>" to stderr.
void stderr_warning(const std::string& message);

/// Throws DataError with the 1-based file line on parse failures.
[[nodiscard]] Dataset parse_csv(std::istream& in, const DatasetSchema& schema,
                                const std::string& source,
                                const WarningSink& warn = stderr_warning);

[[nodiscard]] Dataset load_csv(const std::filesystem::path& path, const DatasetSchema& schema,
                               const WarningSink& warn = stderr_warning);

}  // namespace mvqc::data
