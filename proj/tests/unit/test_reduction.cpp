// Copyright 2026 The catstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "catstab/observables.hpp"
#include "catstab/reduction.hpp"
#include "oracles.hpp"

namespace catstab {
namespace {

ModelSpec spec(int dim, double epsilon = 16.0) {
  ModelSpec s;
  s.mode_count = 2;
  s.eta = {0.15, 0.1};
  s.epsilon = epsilon;
  s.Gamma = 100.0;
  s.gamma_vib = {0.0, 0.0};
  s.mode_dims = {dim, dim};
  return s;
}

TEST(Reduce, Amplitudes) {
  const ReducedModel m = reduce(spec(6));
  EXPECT_NEAR(m.reference_alpha, 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(m.mapped_alpha, 2.0, 1e-15);
  EXPECT_EQ(m.c_dim, 12);
  EXPECT_EQ(m.jumps.size(), 1u);
  EXPECT_TRUE(m.hamiltonian.is_hermitian(1e-14));
  ModelSpec s = spec(6);
  s.dephasing_rate = 5.0;
  EXPECT_EQ(reduce(s, 30).jumps.size(), 2u);
  EXPECT_EQ(reduce(s, 30).c_dim, 30);
}

TEST(Reduce, Rejections) {
  ModelSpec s = spec(6);
  s.variant = HamiltonianVariant::kHigherOrder;
  EXPECT_THROW(reduce(s), ConfigError);
  s = spec(6);
  s.gamma_vib = {0.0005, 0.0005};
  EXPECT_THROW(reduce(s), ConfigError);
  s = spec(6);
  s.mode_count = 3;
  s.eta.push_back(0.1);
  s.mode_dims.push_back(6);
  s.gamma_vib.push_back(0.0);
  EXPECT_THROW(reduce(s), ConfigError);
}

// The symmetric mode c = (a + b) / sqrt(2) spans an invariant subspace of the
// ideal Hamiltonian: compressing the full H onto c^dag^n |0, 0> / sqrt(n!)
// must reproduce the single-mode Hamiltonian exactly.
TEST(Reduce, CompressionOfFullHamiltonian) {
  const int n = 8;
  const int k = n - 2;
  const ModelSpec s = spec(n, 3.0);
  const auto o = oracle::two_mode_ops(n, n);
  const oracle::Dense cd = (o.a + o.b).adjoint() / std::sqrt(2.0);

  const Index vib = static_cast<Index>(n) * n;
  oracle::Dense v = oracle::Dense::Zero(2 * vib, 2 * k);
  for (int internal = 0; internal < 2; ++internal) {
    oracle::Vec col = oracle::Vec::Zero(2 * vib);
    col(internal * vib) = 1.0;
    for (int m = 0; m < k; ++m) {
      v.col(internal * k + m) = col;
      col = cd * col / std::sqrt(m + 1.0);
    }
  }
  ASSERT_LT(oracle::max_abs(v.adjoint() * v - oracle::eye(2 * k)), 1e-12);

  const oracle::Dense compressed = v.adjoint() * build_hamiltonian(s).dense() * v;
  const ReducedModel red = reduce(s, k);
  // Entries coupling past the top reduced level are cut by truncation in both.
  for (int i = 0; i < 2 * k; ++i) {
    for (int j = 0; j < 2 * k; ++j) {
      EXPECT_NEAR(std::abs(compressed(i, j) - red.hamiltonian.dense()(i, j)), 0.0, 1e-12) << i << ", " << j;
    }
  }
  // Invariance: H V = V (V^dag H V) on columns whose image stays inside.
  const oracle::Dense hv = build_hamiltonian(s).dense() * v;
  for (int internal = 0; internal < 2; ++internal) {
    for (int m = 0; m + 2 < k; ++m) {
      const int col = internal * k + m;
      EXPECT_LT((hv.col(col) - v * compressed.col(col)).norm(), 1e-12);
    }
  }
}

TEST(Reduce, InitialStates) {
  const ReducedModel m = reduce(spec(6), 10);
  InitialState init;
  EXPECT_NEAR(std::abs(reduce_initial_state(init, m).amplitudes()(0)), 1.0, 1e-15);
  init.kind = InitialState::Kind::kSymmetricOnePhonon;
  EXPECT_NEAR(std::abs(reduce_initial_state(init, m).amplitudes()(1)), 1.0, 1e-15);
  init.kind = InitialState::Kind::kCat;
  init.alpha = 0.5;
  init.sign = ParitySign::kOdd;
  const StateVector cat = reduce_initial_state(init, m);
  const Complex a(std::sqrt(2.0) * 0.5, 0.0);
  const oracle::Vec ref_g = (oracle::coherent(10, a) - oracle::coherent(10, -a)).normalized();
  EXPECT_NEAR(std::abs(cat.amplitudes().head(10).dot(ref_g)), 1.0, 1e-12);
  init.kind = InitialState::Kind::kFock;
  init.occupations = {1, 0};
  EXPECT_THROW(reduce_initial_state(init, m), ConfigError);
}

TEST(Reduce, TracksFullEvolution) {
  ModelSpec s = spec(8, 1.0);
  s.Gamma = 10.0;
  EvolutionConfig cfg;
  cfg.t_final = 1.0;
  cfg.sample_interval = 0.1;
  cfg.stop_when_steady = false;
  for (auto kind : {InitialState::Kind::kVacuum, InitialState::Kind::kSymmetricOnePhonon}) {
    InitialState init;
    init.kind = kind;
    const OracleReport r = compare_with_full(s, init, cfg);
    EXPECT_TRUE(r.passed) << to_string(kind);
    EXPECT_EQ(r.times.size(), 11u);
    EXPECT_LT(r.max_deviation, 1e-6) << to_string(kind);
    EXPECT_GT(r.f_full.back(), r.f_full.front());
  }
}

TEST(Reduce, OracleReportFormat) {
  OracleReport r;
  r.times = {0.0, 0.5};
  r.f_reduced = {0.1, 0.2};
  r.f_full = {0.1, 0.2005};
  r.max_deviation = 5e-4;
  r.passed = true;
  std::ostringstream os;
  write_oracle_report(os, r);
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("t,f_reduced,f_full,deviation\n", 0), 0u);
  EXPECT_NE(s.find("PASS max_deviation=5.000e-04 tolerance=1.0e-03 samples=2"), std::string::npos);
}

class ReducedSteadyState : public ::testing::TestWithParam<double> {};

// Atomic dephasing leaves the dark cats untouched.
TEST_P(ReducedSteadyState, IsTheCatInEachSector) {
  ModelSpec s = spec(20);
  s.dephasing_rate = GetParam();
  const ReducedModel m = reduce(s, 40);
  for (ParitySign sign : {ParitySign::kEven, ParitySign::kOdd}) {
    const DensityMatrix rho = steady_state_direct(m.generator(), static_cast<int>(sign));
    const StateVector cat = cat_state(m.space.vibrational_space(), m.reference_alpha, sign);
    EXPECT_GT(fidelity_pure(partial_trace_internal(rho), cat), 0.999);
  }
}

INSTANTIATE_TEST_SUITE_P(Dephasing, ReducedSteadyState, ::testing::Values(0.0, 5.0));

}  // namespace
}  // namespace catstab
