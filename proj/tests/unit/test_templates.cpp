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

#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "mvqc/circuit/templates.hpp"
#include "mvqc/error.hpp"
#include "support/dense_oracle.hpp"

namespace {

using mvqc::circuit::AnsatzKind;
using mvqc::circuit::EncodingAxis;
using mvqc::circuit::VqcConfig;
using mvqc::quantum::AngleSource;
using mvqc::quantum::GateKind;
using mvqc::quantum::GateOp;

VqcConfig make(std::size_t n, EncodingAxis enc, AnsatzKind ansatz, std::size_t layers, bool reup) {
  return VqcConfig{.n_qubits = n,
                   .encoding = enc,
                   .ansatz = ansatz,
                   .n_layers = layers,
                   .reuploading = reup,
                   .n_measured = n};
}

std::size_t count_encoding(const std::vector<GateOp>& gates) {
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const GateOp& g) {
    return g.source == AngleSource::Feature;
  }));
}

TEST(Encoding, OneGatePerQubitOnTheChosenAxis) {
  const auto rx = mvqc::circuit::build_encoding(make(2, EncodingAxis::RX, AnsatzKind::BasicEntangling, 1, false));
  ASSERT_EQ(rx.size(), 2u);
  EXPECT_EQ(rx[0], GateOp::encoded(GateKind::RX, 0, 0));
  EXPECT_EQ(rx[1], GateOp::encoded(GateKind::RX, 1, 1));

  const auto ry = mvqc::circuit::build_encoding(make(3, EncodingAxis::RY, AnsatzKind::BasicEntangling, 1, false));
  ASSERT_EQ(ry.size(), 3u);
  for (std::size_t q = 0; q < 3; ++q) {
    EXPECT_EQ(ry[q].kind, GateKind::RY);
    EXPECT_EQ(ry[q].index, q);
    EXPECT_EQ(ry[q].target, q);
  }
}

TEST(Encoding, PiFlipsZeroKeeps) {
  const auto gates = mvqc::circuit::build_encoding(make(2, EncodingAxis::RX, AnsatzKind::BasicEntangling, 1, false));
  const std::vector<double> features{std::numbers::pi, 0.0};
  const auto s = mvqc::quantum::run_circuit(2, gates, {}, features);
  EXPECT_NEAR(mvqc::quantum::expectation_z(s, 0), -1.0, 1e-12);
  EXPECT_NEAR(mvqc::quantum::expectation_z(s, 1), 1.0, 1e-12);
}

TEST(BasicLayer, TwoQubitShape) {
  const auto gates = mvqc::circuit::build_basic_entangling_layer(2, 0);
  const std::vector<GateOp> expected{GateOp::trainable(GateKind::RX, 0, 0),
                                     GateOp::trainable(GateKind::RX, 1, 1), GateOp::cnot(0, 1),
                                     GateOp::cnot(1, 0)};
  EXPECT_EQ(gates, expected);
}

TEST(BasicLayer, FourQubitRingAndParamOffset) {
  const auto gates = mvqc::circuit::build_basic_entangling_layer(4, 2);
  ASSERT_EQ(gates.size(), 8u);
  for (std::size_t q = 0; q < 4; ++q) {
    EXPECT_EQ(gates[q], GateOp::trainable(GateKind::RX, q, 8 + q));
    EXPECT_EQ(gates[4 + q], GateOp::cnot(q, (q + 1) % 4));
  }
  EXPECT_EQ(mvqc::circuit::params_per_layer(AnsatzKind::BasicEntangling, 4), 4u);
}

TEST(BasicLayer, SingleQubitIsConfigError) {
  EXPECT_THROW((void)mvqc::circuit::build_basic_entangling_layer(1, 0), mvqc::ConfigError);
  EXPECT_THROW((void)mvqc::circuit::build_strongly_entangling_layer(1, 0), mvqc::ConfigError);
}

TEST(BasicLayer, ZeroParamsReduceToCnotRing) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  const auto cfg = make(3, EncodingAxis::RY, AnsatzKind::BasicEntangling, 2, true);
  const auto circuit = mvqc::circuit::build_vqc(cfg);
  const std::vector<double> params(circuit.n_params, 0.0);
  const std::vector<double> features{angle(rng), angle(rng), angle(rng)};
  std::vector<GateOp> reduced;
  for (const auto& g : circuit.gates) {
    if (g.source != AngleSource::Param) {
      reduced.push_back(g);
    }
  }
  const auto s = mvqc::quantum::run_circuit(3, circuit.gates, params, features);
  const auto ref = oracle::run(3, reduced, {}, features);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - ref[i]), 0.0, 1e-12);
  }
}

TEST(StronglyLayer, Shape) {
  const auto two = mvqc::circuit::build_strongly_entangling_layer(2, 0);
  ASSERT_EQ(two.size(), 8u);
  const GateKind order[] = {GateKind::RZ, GateKind::RY, GateKind::RZ};
  for (std::size_t q = 0; q < 2; ++q) {
    for (std::size_t r = 0; r < 3; ++r) {
      EXPECT_EQ(two[3 * q + r], GateOp::trainable(order[r], q, 3 * q + r));
    }
  }
  EXPECT_EQ(two[6], GateOp::cnot(0, 1));
  EXPECT_EQ(two[7], GateOp::cnot(1, 0));
  EXPECT_EQ(mvqc::circuit::params_per_layer(AnsatzKind::StronglyEntangling, 5), 15u);
}

TEST(StronglyLayer, ZeroParamsAreIdentityRotations) {
  const auto cfg = make(2, EncodingAxis::RX, AnsatzKind::StronglyEntangling, 1, false);
  const auto circuit = mvqc::circuit::build_vqc(cfg);
  const std::vector<double> params(circuit.n_params, 0.0);
  const std::vector<double> features{0.0, 0.0};
  const auto s = mvqc::quantum::run_circuit(2, circuit.gates, params, features);
  EXPECT_NEAR(std::abs(s[0] - mvqc::quantum::Amplitude(1.0, 0.0)), 0.0, 1e-15);
}

TEST(BuildVqc, ParameterAndEncodingCounts) {
  const auto basic7 = mvqc::circuit::build_vqc(make(2, EncodingAxis::RX, AnsatzKind::BasicEntangling, 7, true));
  EXPECT_EQ(basic7.n_params, 14u);
  EXPECT_EQ(basic7.n_encoding_blocks, 7u);
  EXPECT_EQ(count_encoding(basic7.gates), 14u);

  const auto strongly4 = mvqc::circuit::build_vqc(make(2, EncodingAxis::RY, AnsatzKind::StronglyEntangling, 4, true));
  EXPECT_EQ(strongly4.n_params, 24u);

  const auto once = mvqc::circuit::build_vqc(make(3, EncodingAxis::RX, AnsatzKind::BasicEntangling, 3, false));
  EXPECT_EQ(once.n_encoding_blocks, 1u);
  EXPECT_EQ(count_encoding(once.gates), 3u);
  for (std::size_t q = 0; q < 3; ++q) {
    EXPECT_EQ(once.gates[q].source, AngleSource::Feature);
  }
}

TEST(BuildVqc, ReuploadingPlacesEncodingBeforeEveryLayer) {
  const auto c = mvqc::circuit::build_vqc(make(2, EncodingAxis::RY, AnsatzKind::BasicEntangling, 3, true));
  // Per block: 2 encoding gates, 2 RX, 2 CNOT.
  ASSERT_EQ(c.gates.size(), 18u);
  for (std::size_t block = 0; block < 3; ++block) {
    EXPECT_EQ(c.gates[6 * block].source, AngleSource::Feature);
    EXPECT_EQ(c.gates[6 * block + 1].source, AngleSource::Feature);
    EXPECT_EQ(c.gates[6 * block + 2].source, AngleSource::Param);
  }
}

TEST(BuildVqc, InvalidConfigs) {
  EXPECT_THROW((void)mvqc::circuit::build_vqc(make(2, EncodingAxis::RX, AnsatzKind::BasicEntangling, 0, false)),
               mvqc::ConfigError);
  auto bad = make(2, EncodingAxis::RX, AnsatzKind::BasicEntangling, 1, false);
  bad.n_measured = 3;
  EXPECT_THROW((void)mvqc::circuit::build_vqc(bad), mvqc::ConfigError);
}

TEST(TemplatesProperty, ParamCountAndContiguousIds) {
  for (auto ansatz : {AnsatzKind::BasicEntangling, AnsatzKind::StronglyEntangling}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (std::size_t layers = 1; layers <= 6; ++layers) {
        for (bool reup : {false, true}) {
          const auto c = mvqc::circuit::build_vqc(make(n, EncodingAxis::RX, ansatz, layers, reup));
          const std::size_t per = ansatz == AnsatzKind::BasicEntangling ? n : 3 * n;
          EXPECT_EQ(c.n_params, layers * per);
          EXPECT_EQ(mvqc::circuit::parameter_count(ansatz, layers, n), layers * per);
          std::vector<std::size_t> ids;
          for (const auto& g : c.gates) {
            if (g.source == AngleSource::Param) {
              ids.push_back(g.index);
            }
          }
          ASSERT_EQ(ids.size(), c.n_params);
          std::set<std::size_t> unique(ids.begin(), ids.end());
          EXPECT_EQ(unique.size(), ids.size());
          EXPECT_EQ(*unique.begin(), 0u);
          EXPECT_EQ(*unique.rbegin(), c.n_params - 1);
          EXPECT_EQ(c.n_encoding_blocks, reup ? layers : 1u);
          EXPECT_EQ(count_encoding(c.gates), n * (reup ? layers : 1u));
        }
      }
    }
  }
}

TEST(TemplatesNames, RoundTrip) {
  EXPECT_EQ(mvqc::circuit::parse_encoding(mvqc::circuit::to_string(EncodingAxis::RY)), EncodingAxis::RY);
  EXPECT_EQ(mvqc::circuit::parse_encoding("x"), EncodingAxis::RX);
  EXPECT_EQ(mvqc::circuit::parse_ansatz("strongly"), AnsatzKind::StronglyEntangling);
  EXPECT_EQ(mvqc::circuit::parse_ansatz(mvqc::circuit::to_string(AnsatzKind::BasicEntangling)),
            AnsatzKind::BasicEntangling);
  EXPECT_THROW((void)mvqc::circuit::parse_ansatz("ring"), mvqc::ConfigError);
  EXPECT_THROW((void)mvqc::circuit::parse_encoding("RZ"), mvqc::ConfigError);
}

}  // namespace
