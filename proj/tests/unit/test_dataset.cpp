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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "mvqc/data/dataset.hpp"
#include "mvqc/error.hpp"

namespace {

using mvqc::data::DatasetSchema;

DatasetSchema prostate_like() {
  DatasetSchema s;
  s.name = "toy";
  s.label_column = "diagnosis";
  s.drop_columns = {"id"};
  s.label_mapping = {{"M", 1}, {"B", 0}};
  return s;
}

mvqc::data::Dataset parse(const std::string& text, const DatasetSchema& schema,
                          std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return mvqc::data::parse_csv(in, schema, "toy.csv", [&](const std::string& w) {
    if (warnings) {
      warnings->push_back(w);
    }
  });
}

std::string error_of(const std::string& text, const DatasetSchema& schema) {
  try {
    (void)parse(text, schema);
  } catch (const mvqc::DataError& e) {
    return e.what();
  }
  return "";
}

TEST(Csv, ParsesMappedLabelsAndDropsColumns) {
  const auto d = parse("id,radius,diagnosis,area\n1,10.5,M,300\n2,8,B,\"250\"\n\n3,-1e2,M,7\n",
                       prostate_like());
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.n_features(), 2u);
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"radius", "area"}));
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0, 1}));
  EXPECT_DOUBLE_EQ(d.features(0, 0), 10.5);
  EXPECT_DOUBLE_EQ(d.features(1, 1), 250.0);
  EXPECT_DOUBLE_EQ(d.features(2, 0), -100.0);
  EXPECT_EQ(d.count(1), 2u);
}

TEST(Csv, QuotedHeaderAndCommaInsideQuotes) {
  DatasetSchema s;
  s.label_column = "y";
  const auto d = parse("\"x\",\"y\",\"note, dropped\"\n1.5,1,2\n2.5,0,3\n", [&] {
    auto t = s;
    t.drop_columns = {"note, dropped"};
    return t;
  }());
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"x"}));
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0}));
}

TEST(Csv, ErrorsNameTheLine) {
  const auto s = prostate_like();
  EXPECT_NE(error_of("id,radius,diagnosis,area\n1,2,M,3\n2,2,X,3\n", s).find("line 3"),
            std::string::npos);
  EXPECT_NE(error_of("id,radius,diagnosis,area\n1,2,M,3\n2,abc,B,3\n", s).find("line 3"),
            std::string::npos);
  EXPECT_NE(error_of("id,radius,diagnosis,area\n1,2,M\n", s).find("line 2"), std::string::npos);
  EXPECT_NE(error_of("id,radius,diagnosis,area\n1,nan,M,3\n", s).find("radius"),
            std::string::npos);
  EXPECT_NE(error_of("id,radius,area\n1,2,3\n", s).find("label column"), std::string::npos);
  EXPECT_FALSE(error_of("", s).empty());
  EXPECT_FALSE(error_of("id,radius,diagnosis,area\n", s).empty());
}

TEST(Csv, NumericLabelsWithoutMapping) {
  DatasetSchema s;
  s.label_column = "y";
  EXPECT_EQ(parse("a,y\n1,1\n2,0.0\n", s).labels, (std::vector<int>{1, 0}));
  EXPECT_FALSE(error_of("a,y\n1,2\n", s).empty());
}

TEST(Csv, ProfileMismatchWarns) {
  auto s = prostate_like();
  s.expected_rows = 5;
  s.expected_features = 2;
  s.expected_positive_fraction = 0.5;
  std::vector<std::string> warnings;
  (void)parse("id,radius,diagnosis,area\n1,1,M,1\n2,2,M,2\n", s, &warnings);
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_NE(warnings[0].find("rows"), std::string::npos);
  EXPECT_NE(warnings[1].find("positive fraction"), std::string::npos);
}

TEST(Schema, BundledSchemasLoad) {
  const std::filesystem::path dir = MVQC_DATA_DIR;
  const auto hf = mvqc::data::load_schema(dir / "schemas" / "heart_failure.json");
  EXPECT_EQ(hf.label_column, "DEATH_EVENT");
  EXPECT_EQ(hf.expected_features, 12u);
  const auto pc = mvqc::data::load_schema(dir / "schemas" / "prostate_cancer.json");
  EXPECT_EQ(pc.label_mapping.at("M"), 1);
  EXPECT_EQ(DatasetSchema::from_json(pc.to_json()).to_json(), pc.to_json());
  EXPECT_THROW((void)mvqc::data::load_schema(dir / "schemas" / "missing.json"), mvqc::ConfigError);
}

TEST(Diabetes, MatchesProfile) {
  const std::filesystem::path dir = MVQC_DATA_DIR;
  const auto schema = mvqc::data::load_schema(dir / "schemas" / "diabetes.json");
  std::vector<std::string> warnings;
  const auto d = mvqc::data::load_csv(dir / schema.file, schema,
                                      [&](const std::string& w) { warnings.push_back(w); });
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(d.size(), 768u);
  EXPECT_EQ(d.n_features(), 8u);
  EXPECT_EQ(d.count(1), 268u);
  EXPECT_THROW((void)mvqc::data::load_csv(dir / "nope.csv", schema), mvqc::DataError);
}

}  // namespace
