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

#include "mvqc/data/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "mvqc/error.hpp"
#include "mvqc/util/random.hpp"

namespace mvqc::data {
namespace {

// Splits `total` across classes in proportion to `available`, largest
// remainder first, ties to the lower class index.
std::array<std::size_t, 2> apportion(std::size_t total, const std::array<std::size_t, 2>& available) {
  const std::size_t pool = available[0] + available[1];
  std::array<std::size_t, 2> out{0, 0};
  if (pool == 0) {
    return out;
  }
  std::array<double, 2> remainder{};
  std::size_t assigned = 0;
  for (int c = 0; c < 2; ++c) {
    const double ideal =
        static_cast<double>(available[c]) * static_cast<double>(total) / static_cast<double>(pool);
    out[c] = static_cast<std::size_t>(std::floor(ideal));
    remainder[c] = ideal - std::floor(ideal);
    assigned += out[c];
  }
  while (assigned < total) {
    const int pick = remainder[1] > remainder[0] ? 1 : 0;
    const int c = out[pick] < available[pick] ? pick : 1 - pick;
    ++out[c];
    remainder[c] = -1.0;
    ++assigned;
  }
  return out;
}

}  // namespace

SplitDataset stratified_split(const Dataset& data, SplitFractions fractions, std::uint64_t seed) {
  const double sum = fractions.train + fractions.validation + fractions.test;
  if (!(fractions.train > 0.0) || !(fractions.validation > 0.0) || !(fractions.test > 0.0)) {
    throw DataError("split fractions must all be positive");
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DataError("split fractions must sum to 1, got " + std::to_string(sum));
  }
  const std::size_t n = data.size();
  const auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(n) * fractions.train));
  const auto n_val =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * fractions.validation));
  if (n_train + n_val >= n) {
    throw DataError("dataset of " + std::to_string(n) + " rows is too small for the split");
  }

  util::Rng rng(seed);
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    by_class.at(static_cast<std::size_t>(data.labels[i])).push_back(i);
  }
  for (auto& members : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
  }

  const std::array<std::size_t, 2> counts{by_class[0].size(), by_class[1].size()};
  const auto train_take = apportion(n_train, counts);
  const std::array<std::size_t, 2> rest{counts[0] - train_take[0], counts[1] - train_take[1]};
  const auto val_take = apportion(n_val, rest);

  SplitDataset out;
  out.fractions = fractions;
  out.seed = seed;
  for (int c = 0; c < 2; ++c) {
    const auto& members = by_class[c];
    const std::size_t a = train_take[c];
    const std::size_t b = a + val_take[c];
    out.train_indices.insert(out.train_indices.end(), members.begin(), members.begin() + a);
    out.validation_indices.insert(out.validation_indices.end(), members.begin() + a,
                                  members.begin() + b);
    out.test_indices.insert(out.test_indices.end(), members.begin() + b, members.end());
  }
  // class blocks are interleaved by a final seeded shuffle of each split
  rng.shuffle(std::span<std::size_t>(out.train_indices));
  rng.shuffle(std::span<std::size_t>(out.validation_indices));
  rng.shuffle(std::span<std::size_t>(out.test_indices));

  out.train = data.subset(out.train_indices);
  out.validation = data.subset(out.validation_indices);
  out.test = data.subset(out.test_indices);
  const std::array<const Dataset*, 3> parts{&out.train, &out.validation, &out.test};
  const std::array<const char*, 3> names{"train", "validation", "test"};
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s]->count(0) == 0 || parts[s]->count(1) == 0) {
      throw DataError(std::string(names[s]) + " split of " + std::to_string(parts[s]->size()) +
                      " rows does not contain both classes");
    }
  }
  return out;
}

SplitDataset preprocess(const SplitDataset& raw, PreprocessingPipeline& pipeline) {
  pipeline.fit(raw.train.features);
  SplitDataset out = raw;
  out.train = pipeline.transform(raw.train);
  out.validation = pipeline.transform(raw.validation);
  out.test = pipeline.transform(raw.test);
  return out;
}

}  // namespace mvqc::data
