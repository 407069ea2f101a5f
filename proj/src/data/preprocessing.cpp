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

#include "mvqc/data/preprocessing.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "mvqc/error.hpp"

namespace mvqc::data {
namespace {

void column_range(const Matrix& m, std::size_t c, double& lo, double& hi) {
  lo = m(0, c);
  hi = m(0, c);
  for (std::size_t r = 1; r < m.rows; ++r) {
    lo = std::min(lo, m(r, c));
    hi = std::max(hi, m(r, c));
  }
}

}  // namespace

MinMaxScaler MinMaxScaler::fit(const Matrix& train, const WarningSink& warn) {
  if (train.rows == 0) {
    throw DataError("cannot fit min-max scaling on an empty matrix");
  }
  MinMaxScaler s;
  s.n_inputs = train.cols;
  for (std::size_t c = 0; c < train.cols; ++c) {
    double lo = 0.0;
    double hi = 0.0;
    column_range(train, c, lo, hi);
    if (hi > lo) {
      s.kept_columns.push_back(c);
      s.min.push_back(lo);
      s.max.push_back(hi);
    } else {
      warn("column " + std::to_string(c) + " is constant on the training split; dropped");
    }
  }
  if (s.kept_columns.empty()) {
    throw DataError("every feature column is constant on the training split");
  }
  return s;
}

Matrix MinMaxScaler::transform(const Matrix& samples) const {
  if (samples.cols != n_inputs) {
    throw DataError("min-max scaler expects " + std::to_string(n_inputs) + " columns, got " +
                    std::to_string(samples.cols));
  }
  Matrix out(samples.rows, kept_columns.size());
  for (std::size_t r = 0; r < samples.rows; ++r) {
    for (std::size_t k = 0; k < kept_columns.size(); ++k) {
      const double v = (samples(r, kept_columns[k]) - min[k]) / (max[k] - min[k]);
      out(r, k) = std::clamp(v, 0.0, 1.0);
    }
  }
  return out;
}

nlohmann::json MinMaxScaler::to_json() const {
  return nlohmann::json{
      {"n_inputs", n_inputs}, {"kept_columns", kept_columns}, {"min", min}, {"max", max}};
}

MinMaxScaler MinMaxScaler::from_json(const nlohmann::json& j) {
  MinMaxScaler s;
  s.n_inputs = j.at("n_inputs").get<std::size_t>();
  s.kept_columns = j.at("kept_columns").get<std::vector<std::size_t>>();
  s.min = j.at("min").get<std::vector<double>>();
  s.max = j.at("max").get<std::vector<double>>();
  return s;
}

std::pair<double, double> bounds(AngleRange range) {
  constexpr double pi = std::numbers::pi;
  switch (range) {
    case AngleRange::ZeroPi:
      return {0.0, pi};
    case AngleRange::ZeroTwoPi:
      return {0.0, 2.0 * pi};
    case AngleRange::MinusPiPi:
      return {-pi, pi};
  }
  return {0.0, pi};
}

std::string_view to_string(AngleRange range) {
  switch (range) {
    case AngleRange::ZeroPi:
      return "0_pi";
    case AngleRange::ZeroTwoPi:
      return "0_2pi";
    case AngleRange::MinusPiPi:
      return "-pi_pi";
  }
  return "0_pi";
}

AngleRange parse_angle_range(std::string_view text) {
  if (text == "0_pi" || text == "[0,pi]") {
    return AngleRange::ZeroPi;
  }
  if (text == "0_2pi" || text == "[0,2pi]") {
    return AngleRange::ZeroTwoPi;
  }
  if (text == "-pi_pi" || text == "[-pi,pi]") {
    return AngleRange::MinusPiPi;
  }
  throw ConfigError("unknown angle range '" + std::string(text) +
                    "' (expected 0_pi, 0_2pi or -pi_pi)");
}

AngleNormalizer AngleNormalizer::fit(const Matrix& train, AngleRange range) {
  if (train.rows == 0) {
    throw DataError("cannot fit angle normalization on an empty matrix");
  }
  AngleNormalizer n;
  n.range = range;
  for (std::size_t c = 0; c < train.cols; ++c) {
    double lo = 0.0;
    double hi = 0.0;
    column_range(train, c, lo, hi);
    n.min.push_back(lo);
    n.max.push_back(hi);
  }
  return n;
}

Matrix AngleNormalizer::transform(const Matrix& samples) const {
  if (samples.cols != min.size()) {
    throw DataError("angle normalizer expects " + std::to_string(min.size()) +
                    " columns, got " + std::to_string(samples.cols));
  }
  const auto [lo, hi] = bounds(range);
  Matrix out(samples.rows, samples.cols);
  for (std::size_t r = 0; r < samples.rows; ++r) {
    for (std::size_t c = 0; c < samples.cols; ++c) {
      if (max[c] > min[c]) {
        const double unit = std::clamp((samples(r, c) - min[c]) / (max[c] - min[c]), 0.0, 1.0);
        out(r, c) = lo + unit * (hi - lo);
      } else {
        out(r, c) = 0.5 * (lo + hi);
      }
    }
  }
  return out;
}

nlohmann::json AngleNormalizer::to_json() const {
  return nlohmann::json{{"range", to_string(range)}, {"min", min}, {"max", max}};
}

AngleNormalizer AngleNormalizer::from_json(const nlohmann::json& j) {
  AngleNormalizer n;
  n.range = parse_angle_range(j.at("range").get<std::string>());
  n.min = j.at("min").get<std::vector<double>>();
  n.max = j.at("max").get<std::vector<double>>();
  return n;
}

PreprocessingPipeline::PreprocessingPipeline(PipelineConfig config, WarningSink warn)
    : config_(config), warn_(std::move(warn)) {
  if (config_.n_components == 0) {
    throw ConfigError("n_components must be >= 1");
  }
}

void PreprocessingPipeline::require_stage(Stage expected, std::string_view action) const {
  if (stage_ != expected) {
    throw ConfigError("preprocessing out of order: cannot " + std::string(action) +
                      " at this stage (order is min-max scale -> PCA -> angle normalization)");
  }
}

void PreprocessingPipeline::fit_scaler(const Matrix& train) {
  require_stage(Stage::Empty, "fit the min-max scaler");
  scaler_ = MinMaxScaler::fit(train, warn_);
  stage_ = Stage::Scaled;
}

void PreprocessingPipeline::fit_pca(const Matrix& train) {
  require_stage(Stage::Scaled, "fit PCA");
  const Matrix scaled = scaler_->transform(train);
  if (config_.n_components > scaled.cols) {
    throw ConfigError("n_components " + std::to_string(config_.n_components) +
                      " exceeds the " + std::to_string(scaled.cols) + " usable features");
  }
  pca_ = data::fit_pca(scaled, config_.n_components);
  stage_ = Stage::Reduced;
}

void PreprocessingPipeline::fit_angles(const Matrix& train) {
  require_stage(Stage::Reduced, "fit the angle normalization");
  angles_ = AngleNormalizer::fit(pca_->transform(scaler_->transform(train)), config_.angle_range);
  stage_ = Stage::Encoded;
}

void PreprocessingPipeline::fit(const Matrix& train) {
  fit_scaler(train);
  fit_pca(train);
  fit_angles(train);
}

Matrix PreprocessingPipeline::transform(const Matrix& samples) const {
  require_stage(Stage::Encoded, "transform");
  return angles_->transform(pca_->transform(scaler_->transform(samples)));
}

Dataset PreprocessingPipeline::transform(const Dataset& dataset) const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < config_.n_components; ++k) {
    names.push_back("pc" + std::to_string(k + 1));
  }
  return dataset.with_features(transform(dataset.features), std::move(names));
}

nlohmann::json PreprocessingPipeline::to_json() const {
  require_stage(Stage::Encoded, "serialize");
  return nlohmann::json{
      {"version", 1},
      {"n_components", config_.n_components},
      {"angle_range", to_string(config_.angle_range)},
      {"minmax", scaler_->to_json()},
      {"pca", pca_->to_json()},
      {"angles", angles_->to_json()},
  };
}

PreprocessingPipeline PreprocessingPipeline::from_json(const nlohmann::json& j) {
  try {
    PipelineConfig config;
    config.n_components = j.at("n_components").get<std::size_t>();
    config.angle_range = parse_angle_range(j.at("angle_range").get<std::string>());
    PreprocessingPipeline p(config);
    p.scaler_ = MinMaxScaler::from_json(j.at("minmax"));
    p.pca_ = PcaModel::from_json(j.at("pca"));
    p.angles_ = AngleNormalizer::from_json(j.at("angles"));
    p.stage_ = Stage::Encoded;
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed preprocessing pipeline: ") + e.what());
  }
}

}  // namespace mvqc::data
