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
 * @file preprocessing.hpp
 * Fixed preprocessing chain: min-max scaling to [0, 1], PCA, then an affine
 * map of every principal component onto the rotation-angle range. Every
 * statistic is fitted on the training split only; validation and test
 * values outside the fitted range are clipped.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvqc/data/dataset.hpp"
#include "mvqc/data/pca.hpp"

namespace mvqc::data {

struct MinMaxScaler {
  std::vector<std::size_t> kept_columns;  ///< constant training columns are dropped
  std::vector<double> min;
  std::vector<double> max;
  std::size_t n_inputs = 0;

  static MinMaxScaler fit(const Matrix& train, const WarningSink& warn = stderr_warning);
  [[nodiscard]] Matrix transform(const Matrix& samples) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static MinMaxScaler from_json(const nlohmann::json& j);
};

enum class AngleRange { ZeroPi, ZeroTwoPi, MinusPiPi };

[[nodiscard]] std::pair<double, double> bounds(AngleRange range);
[[nodiscard]] std::string_view to_string(AngleRange range);
[[nodiscard]] AngleRange parse_angle_range(std::string_view text);

/// Column-wise affine map onto the angle range; a constant column maps to
/// the midpoint of the range.
struct AngleNormalizer {
  AngleRange range = AngleRange::ZeroPi;
  std::vector<double> min;
  std::vector<double> max;

  static AngleNormalizer fit(const Matrix& train, AngleRange range = AngleRange::ZeroPi);
  [[nodiscard]] Matrix transform(const Matrix& samples) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static AngleNormalizer from_json(const nlohmann::json& j);
};

struct PipelineConfig {
  std::size_t n_components = 2;
  AngleRange angle_range = AngleRange::ZeroPi;
};

/// Stages must be fitted in order; anything else throws ConfigError.
class PreprocessingPipeline {
 public:
  enum class Stage { Empty, Scaled, Reduced, Encoded };

  explicit PreprocessingPipeline(PipelineConfig config = {}, WarningSink warn = stderr_warning);

  void fit_scaler(const Matrix& train);
  void fit_pca(const Matrix& train);
  void fit_angles(const Matrix& train);
  /// All three stages on the same raw training matrix.
  void fit(const Matrix& train);

  [[nodiscard]] Matrix transform(const Matrix& samples) const;
  [[nodiscard]] Dataset transform(const Dataset& dataset) const;

  [[nodiscard]] Stage stage() const { return stage_; }
  [[nodiscard]] const PipelineConfig& config() const { return config_; }
  [[nodiscard]] const MinMaxScaler& scaler() const { return *scaler_; }
  [[nodiscard]] const PcaModel& pca() const { return *pca_; }
  [[nodiscard]] const AngleNormalizer& angles() const { return *angles_; }

  [[nodiscard]] nlohmann::json to_json() const;
  static PreprocessingPipeline from_json(const nlohmann::json& j);

 private:
  void require_stage(Stage expected, std::string_view action) const;

  PipelineConfig config_;
  WarningSink warn_;
  Stage stage_ = Stage::Empty;
  std::optional<MinMaxScaler> scaler_;
  std::optional<PcaModel> pca_;
  std::optional<AngleNormalizer> angles_;
};

}  // namespace mvqc::data
