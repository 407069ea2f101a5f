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

#include "mvqc/cli/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "mvqc/error.hpp"

namespace mvqc::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) {
    throw ConfigError(where + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown config key '" + (where.empty() ? key : where + "." + key) + "'");
    }
  }
}

std::optional<std::uint64_t> optional_u64(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) {
    return std::nullopt;
  }
  return j.at(key).get<std::uint64_t>();
}

}  // namespace

model::MultiVqcConfig RunConfig::model_config() const {
  auto spec = model;
  spec.n_features = n_components;
  return model::make_chain(spec);
}

json RunConfig::to_json() const {
  json split_json = {{"train", split.train},
                     {"validation", split.validation},
                     {"test", split.test},
                     {"seed", split_seed ? json(*split_seed) : json(nullptr)}};
  json model_json = {{"n_vqcs", model.n_vqcs},
                     {"encoding", std::string(circuit::to_string(model.encoding))},
                     {"ansatz", std::string(circuit::to_string(model.ansatz))},
                     {"reuploading", model.reuploading},
                     {"layers", model.n_layers},
                     {"n_classes", model.n_classes},
                     {"rescale", std::string(model::to_string(model.rescale))}};
  json search_json = {{"enabled", layer_search},
                      {"max_layers", search.max_layers},
                      {"patience", search.patience ? json(*search.patience) : json(nullptr)}};
  return {{"dataset", dataset},
          {"schema", schema},
          {"data_dir", data_dir},
          {"output_dir", output_dir},
          {"n_components", n_components},
          {"angle_range", std::string(data::to_string(angle_range))},
          {"split", split_json},
          {"model", model_json},
          {"train", train.to_json()},
          {"layer_search", search_json}};
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  try {
    reject_unknown(j,
                   {"dataset", "schema", "data_dir", "output_dir", "n_components", "angle_range",
                    "split", "model", "train", "layer_search"},
                   "");
    c.dataset = j.value("dataset", c.dataset);
    c.schema = j.value("schema", c.schema);
    c.data_dir = j.value("data_dir", c.data_dir);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.n_components = j.value("n_components", c.n_components);
    if (j.contains("angle_range")) {
      c.angle_range = data::parse_angle_range(j.at("angle_range").get<std::string>());
    }
    if (j.contains("split")) {
      const auto& s = j.at("split");
      reject_unknown(s, {"train", "validation", "test", "seed"}, "split");
      c.split.train = s.value("train", c.split.train);
      c.split.validation = s.value("validation", c.split.validation);
      c.split.test = s.value("test", c.split.test);
      c.split_seed = optional_u64(s, "seed");
    }
    if (j.contains("model")) {
      const auto& m = j.at("model");
      reject_unknown(m,
                     {"n_vqcs", "encoding", "ansatz", "reuploading", "layers", "n_classes",
                      "rescale"},
                     "model");
      c.model.n_vqcs = m.value("n_vqcs", c.model.n_vqcs);
      if (m.contains("encoding")) {
        c.model.encoding = circuit::parse_encoding(m.at("encoding").get<std::string>());
      }
      if (m.contains("ansatz")) {
        c.model.ansatz = circuit::parse_ansatz(m.at("ansatz").get<std::string>());
      }
      c.model.reuploading = m.value("reuploading", c.model.reuploading);
      c.model.n_layers = m.value("layers", c.model.n_layers);
      c.model.n_classes = m.value("n_classes", c.model.n_classes);
      if (m.contains("rescale")) {
        c.model.rescale = model::parse_rescale(m.at("rescale").get<std::string>());
      }
    }
    if (j.contains("train")) {
      reject_unknown(j.at("train"),
                     {"max_epochs", "patience", "learning_rate", "batch_size", "seed",
                      "init_scale"},
                     "train");
      c.train = training::TrainConfig::from_json(j.at("train"));
    }
    if (j.contains("layer_search")) {
      const auto& s = j.at("layer_search");
      reject_unknown(s, {"enabled", "max_layers", "patience"}, "layer_search");
      c.layer_search = s.value("enabled", c.layer_search);
      c.search.max_layers = s.value("max_layers", c.search.max_layers);
      if (s.contains("patience") && !s.at("patience").is_null()) {
        c.search.patience = s.at("patience").get<std::size_t>();
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config value: ") + e.what());
  }

  if (c.n_components < 1) {
    throw ConfigError("n_components must be >= 1");
  }
  if (c.search.max_layers < 1) {
    throw ConfigError("layer_search.max_layers must be >= 1");
  }
  if (c.search.patience && *c.search.patience < 1) {
    throw ConfigError("layer_search.patience must be >= 1");
  }
  c.train.validate();
  return c;
}

const std::vector<OverrideKey>& override_keys() {
  static const std::vector<OverrideKey> keys = {
      {"dataset", {"dataset"}, "dataset name or CSV path"},
      {"schema", {"schema"}, "schema JSON path"},
      {"data-dir", {"data_dir"}, "directory holding <name>.csv and schemas/"},
      {"output-dir", {"output_dir"}, "artifact directory"},
      {"n-components", {"n_components"}, "PCA components (= qubits)"},
      {"angle-range", {"angle_range"}, "0_pi, 0_2pi or -pi_pi"},
      {"split.train", {"split", "train"}, "train fraction"},
      {"split.validation", {"split", "validation"}, "validation fraction"},
      {"split.test", {"split", "test"}, "test fraction"},
      {"split.seed", {"split", "seed"}, "split seed (defaults to train.seed)"},
      {"model.n-vqcs", {"model", "n_vqcs"}, "VQCs in the chain (1..3)"},
      {"model.encoding", {"model", "encoding"}, "RX or RY"},
      {"model.ansatz", {"model", "ansatz"}, "basic or strongly"},
      {"model.reuploading", {"model", "reuploading"}, "true or false"},
      {"model.layers", {"model", "layers"}, "ansatz layers per VQC"},
      {"model.n-classes", {"model", "n_classes"}, "classes read from the last VQC"},
      {"model.rescale", {"model", "rescale"}, "pi, arccos or identity"},
      {"train.max-epochs", {"train", "max_epochs"}, "epoch cap"},
      {"train.patience", {"train", "patience"}, "early-stopping patience"},
      {"train.learning-rate", {"train", "learning_rate"}, "Adam step size"},
      {"train.batch-size", {"train", "batch_size"}, "mini-batch size"},
      {"train.seed", {"train", "seed"}, "training seed"},
      {"train.init-scale", {"train", "init_scale"}, "init range [0, scale)"},
      {"layer-search.enabled", {"layer_search", "enabled"}, "search the layer count"},
      {"layer-search.max-layers", {"layer_search", "max_layers"}, "layer count cap"},
      {"layer-search.patience", {"layer_search", "patience"}, "non-improving steps (n_qubits)"},
  };
  return keys;
}

void apply_override(json& config, std::string_view flag, std::string_view value) {
  const auto& keys = override_keys();
  const auto it = std::find_if(keys.begin(), keys.end(),
                               [&](const OverrideKey& k) { return k.flag == flag; });
  if (it == keys.end()) {
    throw ConfigError("unknown override --" + std::string(flag));
  }
  json parsed = json::parse(value.begin(), value.end(), nullptr, false);
  if (parsed.is_discarded()) {
    parsed = std::string(value);
  }
  if (it->path.size() == 1 && (it->path[0] == "dataset" || it->path[0] == "schema" ||
                               it->path[0] == "data_dir" || it->path[0] == "output_dir")) {
    parsed = std::string(value);
  }
  json* node = &config;
  for (std::size_t i = 0; i + 1 < it->path.size(); ++i) {
    node = &(*node)[it->path[i]];
  }
  (*node)[it->path.back()] = std::move(parsed);
}

RunConfig load_run_config(const std::optional<std::filesystem::path>& file,
                          const std::vector<std::pair<std::string, std::string>>& overrides) {
  json merged = RunConfig{}.to_json();
  if (file) {
    std::ifstream in(*file);
    if (!in) {
      throw ConfigError("cannot open config file " + file->string());
    }
    json from_file = json::parse(in, nullptr, false);
    if (from_file.is_discarded() || !from_file.is_object()) {
      throw ConfigError("config file " + file->string() + " is not a JSON object");
    }
    reject_unknown(from_file,
                   {"dataset", "schema", "data_dir", "output_dir", "n_components", "angle_range",
                    "split", "model", "train", "layer_search"},
                   "");
    merged.merge_patch(from_file);
  }
  for (const auto& [flag, value] : overrides) {
    apply_override(merged, flag, value);
  }
  return RunConfig::from_json(merged);
}

ResolvedDataset resolve_dataset(const RunConfig& config) {
  namespace fs = std::filesystem;
  ResolvedDataset out;
  const fs::path data_dir(config.data_dir);
  const bool is_path = config.dataset.find('/') != std::string::npos ||
                       fs::path(config.dataset).extension() == ".csv";
  if (!config.schema.empty()) {
    out.schema_path = config.schema;
  } else if (is_path) {
    throw ConfigError("dataset given as a path (" + config.dataset + ") needs an explicit schema");
  } else {
    out.schema_path = data_dir / "schemas" / (config.dataset + ".json");
  }
  out.schema = data::load_schema(out.schema_path);
  out.csv_path = is_path ? fs::path(config.dataset) : data_dir / out.schema.file;
  return out;
}

data::Dataset load_dataset(const RunConfig& config, const data::WarningSink& warn) {
  const auto resolved = resolve_dataset(config);
  return data::load_csv(resolved.csv_path, resolved.schema, warn);
}

}  // namespace mvqc::cli
