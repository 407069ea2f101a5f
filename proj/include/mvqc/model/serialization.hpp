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
 * @file serialization.hpp
 * Versioned JSON form of a model: the resolved Multi-VQC configuration and
 * the flat parameter vector. Doubles are written in shortest round-trip
 * form, so save -> load is lossless.
 */
#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "mvqc/model/multivqc.hpp"

namespace mvqc::model {

inline constexpr const char* kModelFormat = "mvqc-model";
inline constexpr int kModelFormatVersion = 1;

struct SavedModel {
  MultiVqcConfig config;
  std::vector<double> params;
  /// Free-form audit data (run config, preprocessing pipeline, seed).
  nlohmann::json metadata = nlohmann::json::object();
};

[[nodiscard]] nlohmann::json vqc_to_json(const circuit::VqcConfig& config);
[[nodiscard]] circuit::VqcConfig vqc_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json config_to_json(const MultiVqcConfig& config);
[[nodiscard]] MultiVqcConfig config_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json model_to_json(const SavedModel& model);
/// Throws ConfigError on a wrong format tag, version, or parameter count.
[[nodiscard]] SavedModel model_from_json(const nlohmann::json& j);

void save_model(const std::filesystem::path& path, const SavedModel& model);
[[nodiscard]] SavedModel load_model(const std::filesystem::path& path);

}  // namespace mvqc::model
