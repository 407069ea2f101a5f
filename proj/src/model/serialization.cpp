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

#include "mvqc/model/serialization.hpp"

#include <fstream>

#include "mvqc/error.hpp"

namespace mvqc::model {

using nlohmann::json;

json vqc_to_json(const circuit::VqcConfig& config) {
  return json{
      {"n_qubits", config.n_qubits},
      {"encoding", circuit::to_string(config.encoding)},
      {"ansatz", circuit::to_string(config.ansatz)},
      {"n_layers", config.n_layers},
      {"reuploading", config.reuploading},
      {"n_measured", config.n_measured},
  };
}

circuit::VqcConfig vqc_from_json(const json& j) {
  try {
    circuit::VqcConfig config;
    config.n_qubits = j.at("n_qubits").get<std::size_t>();
    config.encoding = circuit::parse_encoding(j.at("encoding").get<std::string>());
    config.ansatz = circuit::parse_ansatz(j.at("ansatz").get<std::string>());
    config.n_layers = j.at("n_layers").get<std::size_t>();
    config.reuploading = j.at("reuploading").get<bool>();
    config.n_measured = j.at("n_measured").get<std::size_t>();
    return config;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed VQC config: ") + e.what());
  }
}

json config_to_json(const MultiVqcConfig& config) {
  json vqcs = json::array();
  for (const auto& v : config.vqcs) {
    vqcs.push_back(vqc_to_json(v));
  }
  return json{
      {"n_classes", config.n_classes},
      {"rescale", to_string(config.rescale)},
      {"vqcs", std::move(vqcs)},
  };
}

MultiVqcConfig config_from_json(const json& j) {
  try {
    MultiVqcConfig config;
    config.n_classes = j.value("n_classes", std::size_t{2});
    config.rescale = parse_rescale(j.value("rescale", std::string("pi")));
    for (const auto& v : j.at("vqcs")) {
      config.vqcs.push_back(vqc_from_json(v));
    }
    return config;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed model config: ") + e.what());
  }
}

json model_to_json(const SavedModel& model) {
  return json{
      {"format", kModelFormat},
      {"version", kModelFormatVersion},
      {"config", config_to_json(model.config)},
      {"params", model.params},
      {"metadata", model.metadata},
  };
}

SavedModel model_from_json(const json& j) {
  if (j.value("format", std::string()) != kModelFormat) {
    throw ConfigError("not an mvqc model document");
  }
  if (j.value("version", 0) != kModelFormatVersion) {
    throw ConfigError("unsupported model format version " + j.value("version", json()).dump());
  }
  SavedModel model;
  model.config = config_from_json(j.at("config"));
  model.params = j.at("params").get<std::vector<double>>();
  model.metadata = j.value("metadata", json::object());
  const MultiVqcModel built(model.config);
  if (built.n_params() != model.params.size()) {
    throw ConfigError("model document has " + std::to_string(model.params.size()) +
                      " parameters, configuration needs " + std::to_string(built.n_params()));
  }
  return model;
}

void save_model(const std::filesystem::path& path, const SavedModel& model) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write model file " + path.string());
  }
  out << model_to_json(model).dump(2) << '\n';
}

SavedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open model file " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("model file " + path.string() + " is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

}  // namespace mvqc::model
