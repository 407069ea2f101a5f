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

#include "mvqc/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvqc/error.hpp"

namespace mvqc::data {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      cell.push_back(ch);
    } else if (ch == ',' && !quoted) {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell.push_back(ch);
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) {
    return false;
  }
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (*begin == '+') {
    ++begin;
  }
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

std::size_t Dataset::count(int label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.name = name;
  out.feature_names = feature_names;
  out.features = Matrix(indices.size(), features.cols);
  out.labels.reserve(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const auto src = features.row(indices[r]);
    std::copy(src.begin(), src.end(), out.features.row(r).begin());
    out.labels.push_back(labels[indices[r]]);
  }
  return out;
}

Dataset Dataset::with_features(Matrix new_features, std::vector<std::string> names) const {
  if (new_features.rows != size()) {
    throw DataError("replacement feature matrix has " + std::to_string(new_features.rows) +
                    " rows, dataset has " + std::to_string(size()));
  }
  Dataset out;
  out.name = name;
  out.labels = labels;
  out.features = std::move(new_features);
  out.feature_names = std::move(names);
  return out;
}

DatasetSchema DatasetSchema::from_json(const nlohmann::json& j) {
  try {
    DatasetSchema s;
    s.name = j.at("name").get<std::string>();
    s.file = j.value("file", std::string());
    s.label_column = j.at("label_column").get<std::string>();
    s.drop_columns = j.value("drop_columns", std::vector<std::string>{});
    s.label_mapping = j.value("label_mapping", std::map<std::string, int>{});
    if (j.contains("expected_rows")) {
      s.expected_rows = j.at("expected_rows").get<std::size_t>();
    }
    if (j.contains("expected_features")) {
      s.expected_features = j.at("expected_features").get<std::size_t>();
    }
    if (j.contains("expected_positive_fraction")) {
      s.expected_positive_fraction = j.at("expected_positive_fraction").get<double>();
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed dataset schema: ") + e.what());
  }
}

nlohmann::json DatasetSchema::to_json() const {
  nlohmann::json j{
      {"name", name},
      {"file", file},
      {"label_column", label_column},
      {"drop_columns", drop_columns},
      {"label_mapping", label_mapping},
  };
  if (expected_rows) {
    j["expected_rows"] = *expected_rows;
  }
  if (expected_features) {
    j["expected_features"] = *expected_features;
  }
  if (expected_positive_fraction) {
    j["expected_positive_fraction"] = *expected_positive_fraction;
  }
  return j;
}

DatasetSchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open schema file " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("schema file " + path.string() + " is not valid JSON: " + e.what());
  }
  return DatasetSchema::from_json(j);
}

void stderr_warning(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

Dataset parse_csv(std::istream& in, const DatasetSchema& schema, const std::string& source,
                  const WarningSink& warn) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_row(line);
      break;
    }
  }
  if (header.empty()) {
    throw DataError(source + ": empty file, expected a header row");
  }

  std::optional<std::size_t> label_col;
  std::vector<std::size_t> feature_cols;
  Dataset ds;
  ds.name = schema.name;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == schema.label_column) {
      label_col = c;
    } else if (std::find(schema.drop_columns.begin(), schema.drop_columns.end(), header[c]) ==
               schema.drop_columns.end()) {
      feature_cols.push_back(c);
      ds.feature_names.push_back(header[c]);
    }
  }
  if (!label_col) {
    throw DataError(source + ": header has no label column '" + schema.label_column + "'");
  }

  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto cells = split_row(line);
    if (cells.size() != header.size()) {
      throw DataError(source + ": line " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " fields, header has " +
                      std::to_string(header.size()));
    }
    const std::string& label_text = cells[*label_col];
    int label = 0;
    if (!schema.label_mapping.empty()) {
      const auto it = schema.label_mapping.find(label_text);
      if (it == schema.label_mapping.end()) {
        throw DataError(source + ": line " + std::to_string(line_no) + ": unknown label '" +
                        label_text + "'");
      }
      label = it->second;
    } else {
      double v = 0.0;
      if (!parse_double(label_text, v) || (v != 0.0 && v != 1.0)) {
        throw DataError(source + ": line " + std::to_string(line_no) + ": label '" +
                        label_text + "' is not 0 or 1");
      }
      label = static_cast<int>(v);
    }
    if (label != 0 && label != 1) {
      throw DataError(source + ": line " + std::to_string(line_no) + ": label maps to " +
                      std::to_string(label) + ", expected 0 or 1");
    }
    for (std::size_t c : feature_cols) {
      double v = 0.0;
      if (!parse_double(cells[c], v)) {
        throw DataError(source + ": line " + std::to_string(line_no) + ", column '" +
                        header[c] + "': cannot parse '" + cells[c] + "' as a number");
      }
      values.push_back(v);
    }
    ds.labels.push_back(label);
  }

  ds.features.rows = ds.labels.size();
  ds.features.cols = feature_cols.size();
  ds.features.values = std::move(values);
  if (ds.size() == 0) {
    throw DataError(source + ": no data rows");
  }

  if (schema.expected_rows && *schema.expected_rows != ds.size()) {
    warn(source + ": " + std::to_string(ds.size()) + " rows, profile for '" + schema.name +
         "' expects " + std::to_string(*schema.expected_rows));
  }
  if (schema.expected_features && *schema.expected_features != ds.n_features()) {
    warn(source + ": " + std::to_string(ds.n_features()) + " features, profile for '" +
         schema.name + "' expects " + std::to_string(*schema.expected_features));
  }
  if (schema.expected_positive_fraction) {
    const double frac = static_cast<double>(ds.count(1)) / static_cast<double>(ds.size());
    if (std::abs(frac - *schema.expected_positive_fraction) > 0.01) {
      warn(source + ": positive fraction " + std::to_string(frac) + ", profile expects " +
           std::to_string(*schema.expected_positive_fraction));
    }
  }
  return ds;
}

Dataset load_csv(const std::filesystem::path& path, const DatasetSchema& schema,
                 const WarningSink& warn) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open dataset file " + path.string());
  }
  return parse_csv(in, schema, path.string(), warn);
}

}  // namespace mvqc::data
