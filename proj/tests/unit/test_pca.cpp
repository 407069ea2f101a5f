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

#include <cmath>
#include <random>
#include <vector>

#include "../support/eigen_oracle.hpp"
#include "mvqc/data/pca.hpp"
#include "mvqc/error.hpp"

namespace {

using mvqc::data::Matrix;

// Correlated gaussian samples with well separated spectrum.
Matrix correlated(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix mix(cols, cols);
  for (auto& v : mix.values) {
    v = g(rng);
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> z(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      z[c] = g(rng) * static_cast<double>(cols - c);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      double acc = 1.5 * static_cast<double>(c);
      for (std::size_t k = 0; k < cols; ++k) {
        acc += mix(c, k) * z[k];
      }
      m(r, c) = acc;
    }
  }
  return m;
}

oracle::Square reference_covariance(const Matrix& x) {
  const std::size_t d = x.cols;
  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      mean[c] += x(r, c) / static_cast<double>(x.rows);
    }
  }
  oracle::Square cov(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t r = 0; r < x.rows; ++r) {
        cov[i][j] += (x(r, i) - mean[i]) * (x(r, j) - mean[j]);
      }
      cov[i][j] /= static_cast<double>(x.rows - 1);
    }
  }
  return cov;
}

TEST(Pca, MatchesIndependentEigenOracle) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const std::size_t d = 2 + seed % 6;
    const auto x = correlated(60, d, seed);
    const auto model = mvqc::data::fit_pca(x, d);
    const auto ref = oracle::max_pivot_jacobi(reference_covariance(x));
    double trace = 0.0;
    for (double v : ref.values) {
      trace += v;
    }
    for (std::size_t k = 0; k < d; ++k) {
      const double scale = std::max(1.0, ref.values[0]);
      EXPECT_NEAR(model.explained_variance[k], ref.values[k], 1e-8 * scale) << seed << "/" << k;
      EXPECT_NEAR(model.explained_variance_ratio[k], ref.values[k] / trace, 1e-8);
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        dot += model.components(k, c) * ref.vectors[k][c];
      }
      EXPECT_NEAR(std::abs(dot), 1.0, 1e-8) << seed << "/" << k;
    }
  }
}

TEST(Pca, JacobiReconstructsMatrix) {
  const auto x = correlated(40, 5, 21);
  const auto cov = mvqc::data::covariance(x);
  const auto eig = mvqc::data::jacobi_eigen(cov);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 5; ++k) {
        acc += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      }
      EXPECT_NEAR(acc, cov(i, j), 1e-10 * std::max(1.0, std::abs(cov(i, j))));
    }
  }
}

TEST(Pca, PointsOnALine) {
  Matrix x(5, 2);
  for (std::size_t r = 0; r < 5; ++r) {
    x(r, 0) = static_cast<double>(r);
    x(r, 1) = static_cast<double>(r);
  }
  const auto model = mvqc::data::fit_pca(x, 2);
  EXPECT_NEAR(model.explained_variance_ratio[0], 1.0, 1e-12);
  EXPECT_NEAR(model.explained_variance_ratio[1], 0.0, 1e-12);
  EXPECT_NEAR(model.components(0, 0), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(model.components(0, 1), std::sqrt(0.5), 1e-12);
}

TEST(Pca, IsotropicSplitsVarianceEvenly) {
  Matrix x(4, 2);
  x.values = {1, 0, -1, 0, 0, 1, 0, -1};
  const auto model = mvqc::data::fit_pca(x, 2);
  EXPECT_NEAR(model.explained_variance_ratio[0], 0.5, 1e-12);
  EXPECT_NEAR(model.explained_variance_ratio[1], 0.5, 1e-12);
}

TEST(Pca, ComponentProperties) {
  const auto x = correlated(80, 6, 33);
  const auto model = mvqc::data::fit_pca(x, 6);
  double total = 0.0;
  for (std::size_t a = 0; a < 6; ++a) {
    total += model.explained_variance_ratio[a];
    if (a > 0) {
      EXPECT_LE(model.explained_variance_ratio[a], model.explained_variance_ratio[a - 1]);
    }
    std::size_t pivot = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      double dot = 0.0;
      for (std::size_t c = 0; c < 6; ++c) {
        dot += model.components(a, c) * model.components(b, c);
      }
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-12);
      if (std::abs(model.components(a, b)) > std::abs(model.components(a, pivot))) {
        pivot = b;
      }
    }
    EXPECT_GT(model.components(a, pivot), 0.0);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  const auto cum = mvqc::data::cumulative(model.explained_variance_ratio);
  EXPECT_NEAR(cum.back(), 1.0, 1e-12);
}

TEST(Pca, FullRankReconstructsInput) {
  const auto x = correlated(30, 4, 44);
  const auto model = mvqc::data::fit_pca(x, 4);
  const auto back = model.inverse_transform(model.transform(x));
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    EXPECT_NEAR(back.values[i], x.values[i], 1e-8);
  }
}

TEST(Pca, MeanRowProjectsToZero) {
  const auto x = correlated(30, 4, 55);
  const auto model = mvqc::data::fit_pca(x, 3);
  Matrix mean(1, 4);
  mean.values = model.mean;
  for (double v : model.transform(mean).values) {
    EXPECT_NEAR(v, 0.0, 1e-12);
  }
}

TEST(Pca, JsonRoundTripAndErrors) {
  const auto x = correlated(30, 4, 66);
  const auto model = mvqc::data::fit_pca(x, 2);
  const auto copy = mvqc::data::PcaModel::from_json(model.to_json());
  EXPECT_EQ(copy.transform(x).values, model.transform(x).values);
  EXPECT_THROW((void)mvqc::data::fit_pca(x, 0), mvqc::DataError);
  EXPECT_THROW((void)mvqc::data::fit_pca(x, 5), mvqc::DataError);
  EXPECT_THROW((void)model.transform(Matrix(2, 3)), mvqc::DataError);
  EXPECT_THROW((void)mvqc::data::fit_pca(Matrix(5, 2, 1.0), 1), mvqc::DataError);
}

}  // namespace
