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
#include <cstdint>
#include <vector>

#include "mvqc/data/dataset.hpp"
#include "mvqc/data/preprocessing.hpp"

namespace mvqc::data {

struct SplitFractions {
  double train = 0.6;
  double validation = 0.2;
  double test = 0.2;
};

struct SplitDataset {
  Dataset train;
  Dataset validation;
  Dataset test;
  SplitFractions fractions;
  std::uint64_t seed = 0;
  /// Row indices into the source dataset.
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> validation_indices;
  std::vector<std::size_t> test_indices;
};

/// Seeded, label-stratified partition. Split sizes are round(N * fraction)
/// for train and validation, the rest for test; each class is apportioned
/// by largest remainder so every split is within one sample of the
/// stratified ideal. Throws DataError when a split would miss a class.
[[nodiscard]] SplitDataset stratified_split(const Dataset& data, SplitFractions fractions,
                                            std::uint64_t seed);

/// Fits `pipeline` on the training split and transforms all three.
[[nodiscard]] SplitDataset preprocess(const SplitDataset& raw, PreprocessingPipeline& pipeline);

}  // namespace mvqc::data
