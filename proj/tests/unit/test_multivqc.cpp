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
#include <numbers>
#include <random>
#include <vector>

#include "mvqc/error.hpp"
#include "mvqc/model/multivqc.hpp"
#include "support/dense_oracle.hpp"

namespace {

using mvqc::circuit::AnsatzKind;
using mvqc::circuit::EncodingAxis;
using mvqc::circuit::VqcConfig;
using mvqc::model::ChainSpec;
using mvqc::model::MultiVqcConfig;
using mvqc::model::MultiVqcModel;
using mvqc::model::RescaleMode;
constexpr double kPi = std::numbers::pi;

VqcConfig vqc(std::size_t n, std::size_t measured, std::size_t layers = 1,
              AnsatzKind ansatz = AnsatzKind::BasicEntangling) {
  return VqcConfig{.n_qubits = n,
                   .encoding = EncodingAxis::RX,
                   .ansatz = ansatz,
                   .n_layers = layers,
                   .reuploading = false,
                   .n_measured = measured};
}

std::vector<double> random_values(std::size_t n, std::mt19937_64& rng, double lo = 0.0,
                                  double hi = 2 * kPi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) {
    x = u(rng);
  }
  return v;
}

/// Chain evaluated with the dense oracle.
std::vector<double> oracle_scores(const MultiVqcModel& model, const std::vector<double>& flat,
                                  std::vector<double> features) {
  std::size_t offset = 0;
  const auto& cfg = model.config();
  for (std::size_t i = 0; i < model.n_vqcs(); ++i) {
    const auto& c = model.circuits()[i];
    const std::vector<double> params(flat.begin() + static_cast<std::ptrdiff_t>(offset),
                                     flat.begin() + static_cast<std::ptrdiff_t>(offset + c.n_params));
    offset += c.n_params;
    const auto psi = oracle::run(c.n_qubits, c.gates, params, features);
    std::vector<double> out;
    for (std::size_t q = 0; q < cfg.vqcs[i].n_measured; ++q) {
      out.push_back(oracle::expect_z(c.n_qubits, psi, q));
    }
    if (i + 1 == model.n_vqcs()) {
      return out;
    }
    features.clear();
    for (double e : out) {
      features.push_back(e * kPi);
    }
  }
  return {};
}

TEST(Forward, IdentityCircuitGivesEvenOdds) {
  const MultiVqcModel model(MultiVqcConfig{{vqc(2, 2)}, 2, RescaleMode::Pi});
  const auto params = model.make_params(std::vector<double>(model.n_params(), 0.0));
  const std::vector<double> x{0.0, 0.0};
  const auto out = model.forward(params, x);
  EXPECT_NEAR(out.class_scores[0], 1.0, 1e-15);
  EXPECT_NEAR(out.class_scores[1], 1.0, 1e-15);
  EXPECT_NEAR(out.probabilities[0], 0.5, 1e-15);
  EXPECT_NEAR(out.probabilities[1], 0.5, 1e-15);
}

TEST(Forward, SecondVqcReceivesRescaledOutputs) {
  const MultiVqcModel model(MultiVqcConfig{{vqc(2, 2), vqc(2, 2)}, 2, RescaleMode::Pi});
  const auto params = model.make_params(std::vector<double>(model.n_params(), 0.0));
  const std::vector<double> x{0.0, 0.0};
  const auto trace = model.trace(params, x);
  ASSERT_EQ(trace.inputs.size(), 2u);
  EXPECT_NEAR(trace.inputs[1][0], kPi, 1e-14);
  EXPECT_NEAR(trace.inputs[1][1], kPi, 1e-14);
}

TEST(Forward, ThreeVqcChainMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ansatz = trial % 2 == 0 ? AnsatzKind::BasicEntangling : AnsatzKind::StronglyEntangling;
    const MultiVqcModel model(MultiVqcConfig{
        {vqc(2, 2, 2, ansatz), vqc(2, 2, 1, ansatz), vqc(2, 2, 3, ansatz)}, 2, RescaleMode::Pi});
    const auto flat = random_values(model.n_params(), rng);
    const auto x = random_values(2, rng, 0.0, kPi);
    const auto out = model.forward(model.make_params(flat), x);
    const auto ref = oracle_scores(model, flat, x);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_NEAR(out.class_scores[k], ref[k], 1e-10);
      EXPECT_LE(std::abs(out.class_scores[k]), 1.0 + 1e-12);
    }
  }
}

TEST(Forward, WidthMismatchIsModelDefinitionError) {
  const MultiVqcModel model(MultiVqcConfig{{vqc(2, 2)}, 2, RescaleMode::Pi});
  const auto params = model.make_params();
  const std::vector<double> x{0.0, 0.0, 0.0};
  EXPECT_THROW((void)model.forward(params, x), mvqc::ModelDefinitionError);
  const MultiVqcModel other(MultiVqcConfig{{vqc(2, 2, 2)}, 2, RescaleMode::Pi});
  const std::vector<double> ok{0.0, 0.0};
  EXPECT_THROW((void)model.forward(other.make_params(), ok), mvqc::ModelDefinitionError);
}

TEST(ValidateConfig, ValidWideChain) {
  const MultiVqcConfig cfg{{vqc(4, 4), vqc(4, 4), vqc(4, 2)}, 2, RescaleMode::Pi};
  EXPECT_TRUE(mvqc::model::validate_config(cfg).empty());
}

TEST(ValidateConfig, IntermediateMustMeasureAll) {
  const MultiVqcConfig cfg{{vqc(4, 3), vqc(3, 2)}, 2, RescaleMode::Pi};
  const auto v = mvqc::model::validate_config(cfg);
  ASSERT_EQ(v.size(), 1u);
  ASSERT_TRUE(v[0].vqc_index.has_value());
  EXPECT_EQ(*v[0].vqc_index, 0u);
}

TEST(ValidateConfig, FinalMustMeasureOnePerClass) {
  const MultiVqcConfig cfg{{vqc(3, 3)}, 2, RescaleMode::Pi};
  const auto v = mvqc::model::validate_config(cfg);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].vqc_index, std::optional<std::size_t>(0));
  EXPECT_THROW(mvqc::model::require_valid(cfg), mvqc::ModelDefinitionError);
}

TEST(ValidateConfig, ReportsEveryViolation) {
  const MultiVqcConfig cfg{{vqc(4, 3), vqc(2, 2), vqc(3, 3), vqc(3, 2)}, 2, RescaleMode::Pi};
  const auto v = mvqc::model::validate_config(cfg);
  // Too many VQCs, VQC 0 partial measurement, VQC 1 width, VQC 2 width.
  EXPECT_GE(v.size(), 4u);
  try {
    mvqc::model::require_valid(cfg);
    FAIL() << "expected ModelDefinitionError";
  } catch (const mvqc::ModelDefinitionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("[vqc 0]"), std::string::npos);
    EXPECT_NE(msg.find("[vqc 1]"), std::string::npos);
  }
}

TEST(MakeChain, Shapes) {
  const auto cfg = mvqc::model::make_chain(ChainSpec{.n_features = 4, .n_vqcs = 3, .n_layers = 2});
  ASSERT_EQ(cfg.vqcs.size(), 3u);
  EXPECT_EQ(cfg.vqcs[0].n_measured, 4u);
  EXPECT_EQ(cfg.vqcs[1].n_measured, 4u);
  EXPECT_EQ(cfg.vqcs[2].n_measured, 2u);
  EXPECT_TRUE(mvqc::model::validate_config(cfg).empty());
  const auto relayered = mvqc::model::with_layers(cfg, 5);
  for (const auto& v : relayered.vqcs) {
    EXPECT_EQ(v.n_layers, 5u);
  }
}

TEST(MultiVqcProperty, SingleVqcChainEqualsDirectRun) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const MultiVqcModel model(mvqc::model::make_chain(
        ChainSpec{.n_features = n, .n_vqcs = 1, .ansatz = AnsatzKind::StronglyEntangling,
                  .reuploading = trial % 2 == 0, .n_layers = 1 + static_cast<std::size_t>(trial % 3)}));
    const auto flat = random_values(model.n_params(), rng);
    const auto x = random_values(n, rng, 0.0, kPi);
    const auto out = model.forward(model.make_params(flat), x);
    const auto direct = mvqc::model::measure_vqc(model.circuits()[0], flat, x, 2);
    EXPECT_EQ(out.class_scores, direct);
  }
}

TEST(MultiVqcProperty, SwappingOutputQubitsSwapsScores) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiVqcModel model(MultiVqcConfig{{vqc(3, 2, 2, AnsatzKind::StronglyEntangling)}, 2,
                                             RescaleMode::Pi});
    auto relabeled = model.circuits()[0];
    auto swap01 = [](std::size_t q) -> std::size_t { return q == 0 ? 1 : q == 1 ? 0 : q; };
    for (auto& g : relabeled.gates) {
      g.target = swap01(g.target);
      if (g.control) {
        g.control = swap01(*g.control);
      }
      // Feature q still drives qubit q's role: relabel the feature index too.
      if (g.source == mvqc::quantum::AngleSource::Feature) {
        g.index = swap01(g.index);
      }
    }
    const auto flat = random_values(model.n_params(), rng);
    auto x = random_values(3, rng, 0.0, kPi);
    const auto a = mvqc::model::measure_vqc(model.circuits()[0], flat, x, 2);
    std::swap(x[0], x[1]);
    const auto b = mvqc::model::measure_vqc(relabeled, flat, x, 2);
    EXPECT_DOUBLE_EQ(a[0], b[1]);
    EXPECT_DOUBLE_EQ(a[1], b[0]);
  }
}

TEST(MultiVqcProperty, OutputInvariants) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n_vqcs = 1 + static_cast<std::size_t>(trial % 3);
    const MultiVqcModel model(mvqc::model::make_chain(ChainSpec{
        .n_features = 3, .n_vqcs = n_vqcs, .encoding = trial % 2 ? EncodingAxis::RY : EncodingAxis::RX,
        .reuploading = true, .n_layers = 2}));
    const auto params = model.make_params(random_values(model.n_params(), rng, -20.0, 20.0));
    const auto x = random_values(3, rng, -5.0, 5.0);
    const auto out = model.forward(params, x);
    double sum = 0.0;
    for (double p : out.probabilities) {
      EXPECT_GE(p, 0.0);
      sum += p;
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    for (double s : out.class_scores) {
      EXPECT_LE(std::abs(s), 1.0 + 1e-12);
    }
    EXPECT_EQ(out.predicted_class, mvqc::model::argmax(out.probabilities));
    const auto again = model.forward(params, x);
    EXPECT_EQ(again.class_scores, out.class_scores);
  }
}

TEST(Rescale, Modes) {
  EXPECT_DOUBLE_EQ(mvqc::model::rescale(RescaleMode::Pi, 0.5), 0.5 * kPi);
  EXPECT_DOUBLE_EQ(mvqc::model::rescale(RescaleMode::ArcCos, 0.0), kPi / 2);
  EXPECT_DOUBLE_EQ(mvqc::model::rescale(RescaleMode::Identity, -0.25), -0.25);
  EXPECT_DOUBLE_EQ(mvqc::model::rescale_derivative(RescaleMode::Pi, 0.3), kPi);
  EXPECT_DOUBLE_EQ(mvqc::model::rescale_derivative(RescaleMode::ArcCos, 0.0), -1.0);
  EXPECT_TRUE(std::isinf(mvqc::model::rescale_derivative(RescaleMode::ArcCos, 1.0)));
  EXPECT_EQ(mvqc::model::parse_rescale("arccos"), RescaleMode::ArcCos);
  EXPECT_EQ(mvqc::model::parse_rescale(mvqc::model::to_string(RescaleMode::Identity)), RescaleMode::Identity);
  EXPECT_THROW((void)mvqc::model::parse_rescale("tanh"), mvqc::ConfigError);
}

TEST(Softmax, StableForLargeScores) {
  const std::vector<double> big{1000.0, 1001.0};
  const auto p = mvqc::model::softmax(big);
  EXPECT_NEAR(p[1], 1.0 / (1.0 + std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
}

}  // namespace
