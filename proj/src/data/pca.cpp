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

#include "mvqc/data/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mvqc/error.hpp"

namespace mvqc::data {

SymmetricEigen jacobi_eigen(const Matrix& symmetric, double tolerance, int max_sweeps) {
  if (symmetric.rows != symmetric.cols) {
    throw DataError("eigendecomposition needs a square matrix");
  }
  const std::size_t n = symmetric.rows;
  Matrix a = symmetric;
  SymmetricEigen out;
  out.vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.vectors(i, i) = 1.0;
  }

  double frobenius = 0.0;
  for (double v : a.values) {
    frobenius += v * v;
  }
  const double threshold = tolerance * tolerance * frobenius;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off += 2.0 * a(p, q) * a(p, q);
      }
    }
    if (off <= threshold) {
      break;
    }
    out.sweeps = sweep + 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = out.vectors(k, p);
          const double vkq = out.vectors(k, q);
          out.vectors(k, p) = c * vkp - s * vkq;
          out.vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(i, i);
  }
  return out;
}

Matrix covariance(const Matrix& samples, std::vector<double>* means) {
  const std::size_t n = samples.rows;
  const std::size_t d = samples.cols;
  if (n < 2) {
    throw DataError("covariance needs at least 2 samples");
  }
  std::vector<double> mu(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      mu[c] += samples(r, c);
    }
  }
  for (double& m : mu) {
    m /= static_cast<double>(n);
  }
  Matrix cov(d, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      const double di = samples(r, i) - mu[i];
      for (std::size_t j = i; j < d; ++j) {
        cov(i, j) += di * (samples(r, j) - mu[j]);
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      cov(i, j) /= static_cast<double>(n - 1);
      cov(j, i) = cov(i, j);
    }
  }
  if (means) {
    *means = std::move(mu);
  }
  return cov;
}

PcaModel fit_pca(const Matrix& train, std::size_t k) {
  const std::size_t d = train.cols;
  if (k == 0 || k > d) {
    throw DataError("PCA needs 1 <= k <= " + std::to_string(d) + ", got k = " + std::to_string(k));
  }
  if (train.rows <= k) {
    throw DataError("PCA with k = " + std::to_string(k) + " needs more than k samples, got " +
                    std::to_string(train.rows));
  }
  PcaModel model;
  const Matrix cov = covariance(train, &model.mean);
  double trace = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    trace += cov(i, i);
  }
  if (!(trace > 0.0)) {
    throw DataError("PCA input has zero total variance");
  }

  const auto eig = jacobi_eigen(cov);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return eig.values[a] > eig.values[b];
  });

  model.components = Matrix(k, d);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t col = order[r];
    std::size_t pivot = 0;
    for (std::size_t c = 1; c < d; ++c) {
      if (std::abs(eig.vectors(c, col)) > std::abs(eig.vectors(pivot, col))) {
        pivot = c;
      }
    }
    const double sign = eig.vectors(pivot, col) < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < d; ++c) {
      model.components(r, c) = sign * eig.vectors(c, col);
    }
    const double lambda = std::max(eig.values[col], 0.0);
    model.explained_variance.push_back(lambda);
    model.explained_variance_ratio.push_back(std::min(lambda / trace, 1.0));
  }
  return model;
}

Matrix PcaModel::transform(const Matrix& samples) const {
  if (samples.cols != n_inputs()) {
    throw DataError("PCA expects " + std::to_string(n_inputs()) + " columns, got " +
                    std::to_string(samples.cols));
  }
  Matrix out(samples.rows, n_components());
  for (std::size_t r = 0; r < samples.rows; ++r) {
    for (std::size_t k = 0; k < n_components(); ++k) {
      double acc = 0.0;
      for (std::size_t c = 0; c < samples.cols; ++c) {
        acc += (samples(r, c) - mean[c]) * components(k, c);
      }
      out(r, k) = acc;
    }
  }
  return out;
}

Matrix PcaModel::inverse_transform(const Matrix& projected) const {
  if (projected.cols != n_components()) {
    throw DataError("inverse PCA expects " + std::to_string(n_components()) + " columns, got " +
                    std::to_string(projected.cols));
  }
  Matrix out(projected.rows, n_inputs());
  for (std::size_t r = 0; r < projected.rows; ++r) {
    for (std::size_t c = 0; c < n_inputs(); ++c) {
      double acc = mean[c];
      for (std::size_t k = 0; k < n_components(); ++k) {
        acc += projected(r, k) * components(k, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

nlohmann::json PcaModel::to_json() const {
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < components.rows; ++r) {
    const auto row = components.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return nlohmann::json{
      {"mean", mean},
      {"components", rows},
      {"explained_variance", explained_variance},
      {"explained_variance_ratio", explained_variance_ratio},
  };
}

PcaModel PcaModel::from_json(const nlohmann::json& j) {
  PcaModel model;
  model.mean = j.at("mean").get<std::vector<double>>();
  const auto rows = j.at("components").get<std::vector<std::vector<double>>>();
  model.components = Matrix(rows.size(), model.mean.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != model.mean.size()) {
      throw ConfigError("PCA component row has the wrong width");
    }
    std::copy(rows[r].begin(), rows[r].end(), model.components.row(r).begin());
  }
  model.explained_variance = j.value("explained_variance", std::vector<double>{});
  model.explained_variance_ratio = j.value("explained_variance_ratio", std::vector<double>{});
  return model;
}

std::vector<double> cumulative(const std::vector<double>& ratios) {
  std::vector<double> out(ratios.size());
  std::partial_sum(ratios.begin(), ratios.end(), out.begin());
  return out;
}

}  // namespace mvqc::data
