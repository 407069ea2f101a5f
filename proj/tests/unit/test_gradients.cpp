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
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "mvqc/error.hpp"
#include "mvqc/gradients/gradients.hpp"

namespace {

using mvqc::circuit::AnsatzKind;
using mvqc::circuit::Circuit;
using mvqc::circuit::EncodingAxis;
using mvqc::circuit::VqcConfig;
using mvqc::model::ChainSpec;
using mvqc::model::MultiVqcModel;
using mvqc::model::RescaleMode;
using mvqc::quantum::GateKind;
using mvqc::quantum::GateOp;
using mvqc::training::ClassWeights;
constexpr double kPi = std::numbers::pi;

std::vector<double> uniform(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) {
    x = u(rng);
  }
  return v;
}

/// Central differences of <Z_q> with respect to every parameter.
std::vector<double> fd_expectation(const Circuit& c, std::vector<double> params,
                                   const std::vector<double>& features, std::size_t q,
                                   double h = 1e-5) {
  std::vector<double> out(params.size());
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double keep = params[k];
    params[k] = keep + h;
    const double up = mvqc::quantum::expectation_z(
        mvqc::quantum::run_circuit(c.n_qubits, c.gates, params, features), q);
    params[k] = keep - h;
    const double down = mvqc::quantum::expectation_z(
        mvqc::quantum::run_circuit(c.n_qubits, c.gates, params, features), q);
    params[k] = keep;
    out[k] = (up - down) / (2 * h);
  }
  return out;
}

TEST(ExpectationGradient, SingleRyAnalytic) {
  const Circuit c{1, {GateOp::trainable(GateKind::RY, 0, 0)}, 1, 0};
  const std::vector<double> at_half_pi{kPi / 2};
  EXPECT_NEAR(mvqc::gradients::expectation_gradient(c, at_half_pi, {}, 0)[0], -1.0, 1e-14);
  const std::vector<double> at_zero{0.0};
  EXPECT_NEAR(mvqc::gradients::expectation_gradient(c, at_zero, {}, 0)[0], 0.0, 1e-15);
}

TEST(ExpectationGradient, StronglyCircuitMatchesFiniteDifference) {
  std::mt19937_64 rng(12);
  const auto c = mvqc::circuit::build_vqc(VqcConfig{.n_qubits = 3,
                                                    .encoding = EncodingAxis::RY,
                                                    .ansatz = AnsatzKind::StronglyEntangling,
                                                    .n_layers = 2,
                                                    .reuploading = true,
                                                    .n_measured = 3});
  const auto params = uniform(c.n_params, rng, 0, 2 * kPi);
  const auto x = uniform(3, rng, 0, kPi);
  for (std::size_t q = 0; q < 3; ++q) {
    const auto g = mvqc::gradients::expectation_gradient(c, params, x, q);
    const auto fd = fd_expectation(c, params, x, q);
    for (std::size_t k = 0; k < g.size(); ++k) {
      EXPECT_NEAR(g[k], fd[k], 1e-6);
    }
  }
}

TEST(ExpectationGradient, DecoupledQubitHasZeroGradient) {
  const Circuit c{3,
                  {GateOp::trainable(GateKind::RY, 0, 0), GateOp::trainable(GateKind::RX, 2, 1),
                   GateOp::trainable(GateKind::RY, 1, 2), GateOp::cnot(0, 1)},
                  3, 0};
  const std::vector<double> params{0.4, 1.3, -0.7};
  const auto g = mvqc::gradients::expectation_gradient(c, params, {}, 0);
  EXPECT_NEAR(g[1], 0.0, 1e-12);
  EXPECT_NEAR(g[2], 0.0, 1e-12);
  EXPECT_NEAR(g[0], -std::sin(0.4), 1e-14);
}

TEST(GradientProperty, ShiftRuleMatchesFiniteDifferenceAcrossTemplates) {
  std::mt19937_64 rng(13);
  int configs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const VqcConfig cfg{.n_qubits = 2 + static_cast<std::size_t>(trial % 3),
                        .encoding = trial % 2 ? EncodingAxis::RY : EncodingAxis::RX,
                        .ansatz = (trial / 2) % 2 ? AnsatzKind::StronglyEntangling
                                                  : AnsatzKind::BasicEntangling,
                        .n_layers = 1 + static_cast<std::size_t>(trial % 4),
                        .reuploading = (trial / 4) % 2 == 0,
                        .n_measured = 2};
    const auto c = mvqc::circuit::build_vqc(cfg);
    const auto params = uniform(c.n_params, rng, 0, 2 * kPi);
    const auto x = uniform(cfg.n_qubits, rng, 0, kPi);
    const auto jac = mvqc::gradients::vqc_jacobian(c, params, x, cfg.n_qubits);
    for (std::size_t q = 0; q < cfg.n_qubits; ++q) {
      const auto fd = fd_expectation(c, params, x, q);
      for (std::size_t k = 0; k < c.n_params; ++k) {
        ASSERT_NEAR(jac.param(q, k), fd[k], 1e-6) << "trial " << trial << " q " << q << " p " << k;
      }
      // Feature derivatives, summed over every gate the feature drives.
      for (std::size_t f = 0; f < cfg.n_qubits; ++f) {
        auto xp = x, xm = x;
        xp[f] += 1e-5;
        xm[f] -= 1e-5;
        const double up = mvqc::quantum::expectation_z(
            mvqc::quantum::run_circuit(c.n_qubits, c.gates, params, xp), q);
        const double down = mvqc::quantum::expectation_z(
            mvqc::quantum::run_circuit(c.n_qubits, c.gates, params, xm), q);
        ASSERT_NEAR(jac.feature(q, f), (up - down) / 2e-5, 1e-6);
      }
    }
    ++configs;
  }
  EXPECT_GE(configs, 100);
}

TEST(GradientProperty, JacobianOutputsMatchForward) {
  std::mt19937_64 rng(14);
  const auto c = mvqc::circuit::build_vqc(VqcConfig{.n_qubits = 4,
                                                    .ansatz = AnsatzKind::StronglyEntangling,
                                                    .n_layers = 2,
                                                    .n_measured = 4});
  const auto params = uniform(c.n_params, rng, 0, 2 * kPi);
  const auto x = uniform(4, rng, 0, kPi);
  const auto jac = mvqc::gradients::vqc_jacobian(c, params, x, 4);
  EXPECT_EQ(jac.outputs, mvqc::model::measure_vqc(c, params, x, 4));
}

TEST(LossGradient, SingleVqcIsChainRuleWithOneLink) {
  std::mt19937_64 rng(15);
  const MultiVqcModel model(mvqc::model::make_chain(ChainSpec{.n_features = 3, .n_vqcs = 1, .n_layers = 2}));
  const auto params = model.make_params(uniform(model.n_params(), rng, 0, 2 * kPi));
  const auto x = uniform(3, rng, 0, kPi);
  const ClassWeights w{0.3, 0.7};
  const auto out = model.forward(params, x);
  const auto ds = mvqc::training::weighted_loss_score_gradient(out, 1, w);
  const auto& c = model.circuits()[0];
  const auto g0 = mvqc::gradients::expectation_gradient(c, params.values(), x, 0);
  const auto g1 = mvqc::gradients::expectation_gradient(c, params.values(), x, 1);
  const auto grad = mvqc::gradients::loss_gradient(model, params, x, 1, w);
  for (std::size_t k = 0; k < grad.size(); ++k) {
    EXPECT_NEAR(grad[k], ds[0] * g0[k] + ds[1] * g1[k], 1e-14);
  }
}

TEST(LossGradient, ChainsMatchFiniteDifference) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const ChainSpec spec{.n_features = 2 + static_cast<std::size_t>(trial % 2),
                         .n_vqcs = 2 + static_cast<std::size_t>(trial % 2),
                         .encoding = trial % 3 == 0 ? EncodingAxis::RY : EncodingAxis::RX,
                         .ansatz = trial % 2 ? AnsatzKind::StronglyEntangling : AnsatzKind::BasicEntangling,
                         .reuploading = trial % 4 < 2,
                         .n_layers = 1 + static_cast<std::size_t>(trial % 3),
                         .rescale = trial % 5 == 4 ? RescaleMode::Identity : RescaleMode::Pi};
    const MultiVqcModel model(mvqc::model::make_chain(spec));
    const auto params = model.make_params(uniform(model.n_params(), rng, 0, 2 * kPi));
    const auto x = uniform(spec.n_features, rng, 0, kPi);
    const ClassWeights w{0.62, 0.38};
    const std::size_t label = static_cast<std::size_t>(trial % 2);
    const auto g = mvqc::gradients::loss_gradient(model, params, x, label, w);
    const auto fd = mvqc::gradients::finite_difference_loss_gradient(model, params, x, label, w);
    for (std::size_t k = 0; k < g.size(); ++k) {
      EXPECT_NEAR(g[k], fd[k], 1e-6 + 1e-5 * std::abs(fd[k])) << "trial " << trial << " p " << k;
    }
  }
}

TEST(LossGradient, ArcCosChainAwayFromSaturation) {
  std::mt19937_64 rng(17);
  const MultiVqcModel model(mvqc::model::make_chain(
      ChainSpec{.n_features = 2, .n_vqcs = 2, .n_layers = 2, .rescale = RescaleMode::ArcCos}));
  const auto params = model.make_params(uniform(model.n_params(), rng, 0.3, 2.8));
  const std::vector<double> x{0.9, 2.1};
  const ClassWeights w{1.0, 1.0};
  const auto g = mvqc::gradients::loss_gradient(model, params, x, 0, w);
  const auto fd = mvqc::gradients::finite_difference_loss_gradient(model, params, x, 0, w);
  for (std::size_t k = 0; k < g.size(); ++k) {
    EXPECT_NEAR(g[k], fd[k], 1e-5);
  }
}

TEST(LossGradient, NonFiniteSignalNamesTheVqc) {
  const MultiVqcModel model(mvqc::model::make_chain(ChainSpec{.n_features = 2, .n_vqcs = 2}));
  const auto params = model.make_params(std::vector<double>(model.n_params(), 0.3));
  const std::vector<double> x{std::numeric_limits<double>::quiet_NaN(), 0.1};
  try {
    (void)mvqc::gradients::loss_gradient(model, params, x, 0, ClassWeights{});
    FAIL() << "expected NumericalError";
  } catch (const mvqc::NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("VQC 0"), std::string::npos) << e.what();
  }
}

TEST(LossGradient, DeterministicBitForBit) {
  std::mt19937_64 rng(18);
  const MultiVqcModel model(mvqc::model::make_chain(
      ChainSpec{.n_features = 3, .n_vqcs = 3, .ansatz = AnsatzKind::StronglyEntangling, .n_layers = 2}));
  const auto params = model.make_params(uniform(model.n_params(), rng, 0, 2 * kPi));
  const auto x = uniform(3, rng, 0, kPi);
  const auto a = mvqc::gradients::loss_gradient(model, params, x, 1, ClassWeights{0.4, 0.6});
  const auto b = mvqc::gradients::loss_gradient(model, params, x, 1, ClassWeights{0.4, 0.6});
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)), 0);
}

TEST(LossGradient, LossMatchesForward) {
  const MultiVqcModel model(mvqc::model::make_chain(ChainSpec{.n_features = 2, .n_vqcs = 2}));
  const auto params = model.make_params(std::vector<double>(model.n_params(), 0.5));
  const std::vector<double> x{0.2, 1.0};
  const ClassWeights w{0.68, 0.32};
  const auto lg = mvqc::gradients::loss_and_gradient(model, params, x, 1, w);
  EXPECT_DOUBLE_EQ(lg.loss, mvqc::training::weighted_loss(model.forward(params, x), 1, w));
}

}  // namespace
