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
#include "oracles.hpp"

namespace catstab {
namespace {

DensityMatrix vib_cat(int dim, double alpha, ParitySign sign) {
  const HilbertSpace vib = HilbertSpace::vibrational({dim, dim});
  return DensityMatrix::from_pure(cat_state(vib, alpha, sign));
}

TEST(PartialTrace, InternalFactor) {
  const HilbertSpace space({2, 3});
  const Matrix r = oracle::random_density(12, 7);
  const DensityMatrix vib = partial_trace_internal(DensityMatrix(space, r));
  EXPECT_FALSE(vib.space().has_internal());
  EXPECT_LT(oracle::max_abs(vib.entries() - (r.topLeftCorner(6, 6) + r.bottomRightCorner(6, 6))), 1e-15);
  EXPECT_NEAR(vib.trace().real(), 1.0, 1e-12);
}

TEST(PartialTrace, ProductStateFactorizes) {
  const oracle::Dense ra = oracle::random_density(3, 1);
  const oracle::Dense rb = oracle::random_density(4, 2);
  const DensityMatrix joint(HilbertSpace::vibrational({3, 4}), oracle::kron(ra, rb));
  EXPECT_LT(oracle::max_abs(trace_out_mode(joint, 0).entries() - rb), 1e-14);
  EXPECT_LT(oracle::max_abs(trace_out_mode(joint, 1).entries() - ra), 1e-14);
}

TEST(PartialTrace, MiddleOfThreeModes) {
  const oracle::Dense ra = oracle::random_density(2, 3);
  const oracle::Dense rb = oracle::random_density(3, 4);
  const oracle::Dense rc = oracle::random_density(2, 5);
  const DensityMatrix joint(HilbertSpace::vibrational({2, 3, 2}), oracle::kron(ra, oracle::kron(rb, rc)));
  EXPECT_LT(oracle::max_abs(trace_out_mode(joint, 1).entries() - oracle::kron(ra, rc)), 1e-14);
  EXPECT_THROW(trace_out_mode(DensityMatrix(HilbertSpace({2}), Matrix::Identity(4, 4) / 4.0), 0), DimensionError);
}

TEST(Fidelity, PureOverlapAndVibrationalTarget) {
  const HilbertSpace space({6, 6});
  const StateVector cat = cat_state(space, 1.0, ParitySign::kEven);
  const DensityMatrix rho = DensityMatrix::from_pure(cat);
  EXPECT_NEAR(fidelity_pure(rho, cat), 1.0, 1e-14);
  EXPECT_NEAR(fidelity_pure(partial_trace_internal(rho), cat), 1.0, 1e-14);
  const StateVector odd = cat_state(space, 1.0, ParitySign::kOdd);
  EXPECT_NEAR(fidelity_pure(rho, odd), 0.0, 1e-14);
}

TEST(Parity, FockAndCats) {
  const HilbertSpace space({5, 5});
  const std::vector<int> n{1, 2};
  EXPECT_EQ(parity_expectation(DensityMatrix::from_pure(fock_state(space, n))), -1.0);
  EXPECT_NEAR(parity_expectation(vib_cat(20, 1.5, ParitySign::kOdd)), -1.0, 1e-12);
  EXPECT_NEAR(parity_expectation(vib_cat(20, 1.5, ParitySign::kEven)), 1.0, 1e-12);
  EXPECT_EQ(excited_population(vib_cat(4, 0.5, ParitySign::kEven)), 0.0);
}

TEST(Probes, StandardSet) {
  const HilbertSpace space({5, 5});
  const StateVector target = cat_state(space, 0.8, ParitySign::kOdd);
  const DensityMatrix rho = DensityMatrix::from_pure(target);
  const auto probes = standard_probes(target);
  ASSERT_EQ(probes.size(), 4u);
  EXPECT_EQ(probes[0].name, "fidelity");
  EXPECT_EQ(probes[1].name, "parity");
  EXPECT_EQ(probes[2].name, "pop_e");
  EXPECT_EQ(probes[3].name, "purity");
  EXPECT_NEAR(probes[0].evaluate(rho), 1.0, 1e-13);
  EXPECT_NEAR(probes[1].evaluate(rho), -1.0, 1e-13);
  EXPECT_NEAR(probes[3].evaluate(rho), 1.0, 1e-13);
}

TEST(Wigner, VacuumOrigin) {
  const HilbertSpace vib = HilbertSpace::vibrational({8, 8});
  const std::vector<int> zeros{0, 0};
  const DensityMatrix rho = DensityMatrix::from_pure(fock_state(vib, zeros));
  EXPECT_NEAR(wigner_joint(rho, 0.0, 0.0), kTwoModeWignerBound, 1e-14);
  // Product of single-mode Gaussians (2/pi) exp(-2|z|^2).
  const Complex b(0.3, -0.2);
  const Complex c(-0.1, 0.4);
  EXPECT_NEAR(wigner_joint(rho, b, c), kTwoModeWignerBound * std::exp(-2.0 * (std::norm(b) + std::norm(c))), 1e-12);
}

TEST(Wigner, EvenCatMatchesClosedForm) {
  const double alpha = 2.0;
  const DensityMatrix rho = vib_cat(34, alpha, ParitySign::kEven);
  for (double y1 : {-1.0, -0.37, 0.0, 0.21, 0.8}) {
    for (double y2 : {-0.9, 0.0, 0.45}) {
      const Complex b(0.0, y1);
      const Complex c(0.0, y2);
      EXPECT_NEAR(wigner_joint(rho, b, c), oracle::cat_wigner(alpha, 1, b, c), 1e-9) << y1 << ", " << y2;
    }
  }
  // Off the imaginary axes as well.
  const Complex b(1.7, 0.2);
  const Complex c(2.1, -0.3);
  EXPECT_NEAR(wigner_joint(rho, b, c), oracle::cat_wigner(alpha, 1, b, c), 1e-9);
}

TEST(Wigner, OddCatOriginAndBound) {
  const DensityMatrix rho = vib_cat(30, 2.0, ParitySign::kOdd);
  EXPECT_NEAR(wigner_joint(rho, 0.0, 0.0), -kTwoModeWignerBound, 1e-12);
  const WignerGrid grid = wigner_plane_cut(rho, -1.0, 1.0, 21);
  EXPECT_LE(grid.values.cwiseAbs().maxCoeff(), kTwoModeWignerBound + 1e-12);
}

TEST(Wigner, FringesFlipBetweenParities) {
  const DensityMatrix even = vib_cat(30, 2.0, ParitySign::kEven);
  const DensityMatrix odd = vib_cat(30, 2.0, ParitySign::kOdd);
  const WignerGrid ge = wigner_plane_cut(even, -1.0, 1.0, 21);
  const WignerGrid go = wigner_plane_cut(odd, -1.0, 1.0, 21);
  ASSERT_EQ(ge.axis1.size(), 21u);
  EXPECT_DOUBLE_EQ(ge.axis1.front(), -1.0);
  EXPECT_DOUBLE_EQ(ge.axis1.back(), 1.0);
  // Near the origin the Gaussian lobes are negligible, so W_odd ~ -W_even.
  EXPECT_LT(oracle::max_abs((ge.values + go.values).cast<Complex>()), 1e-6);
  // On the anti-diagonal y1 + y2 = 0 only the Gaussian envelope remains.
  EXPECT_NEAR(ge.values(5, 15), ge.values(15, 5), 1e-12);
  EXPECT_NEAR(ge.values(5, 15), kTwoModeWignerBound * std::exp(-1.0), 1e-6);
  EXPECT_NEAR(ge.values(10, 10), kTwoModeWignerBound, 1e-6);
}

TEST(Wigner, PlaneCutMatchesPointwiseAndIsThreadIndependent) {
  const DensityMatrix rho = vib_cat(16, 1.2, ParitySign::kOdd);
  const WignerGrid one = wigner_plane_cut(rho, -0.8, 0.6, 9, 1);
  const WignerGrid many = wigner_plane_cut(rho, -0.8, 0.6, 9, 4);
  EXPECT_EQ(one.values, many.values);
  for (int r = 0; r < 9; r += 4) {
    for (int c = 0; c < 9; c += 3) {
      const double w = wigner_joint(rho, Complex(0.0, one.axis1[r]), Complex(0.0, one.axis2[c]));
      EXPECT_NEAR(one.values(r, c), w, 1e-14);
    }
  }
}

TEST(Wigner, GuardsAndErrors) {
  const DensityMatrix rho = vib_cat(8, 0.5, ParitySign::kEven);
  EXPECT_THROW(wigner_joint(rho, Complex(0.0, 3.0), 0.0), TruncationError);
  EXPECT_THROW(wigner_plane_cut(rho, 1.0, -1.0, 5), ConfigError);
  EXPECT_THROW(wigner_plane_cut(rho, -1.0, 1.0, 1), ConfigError);
  const DensityMatrix full = DensityMatrix::from_pure(cat_state(HilbertSpace({4, 4}), 0.5, ParitySign::kEven));
  EXPECT_THROW(wigner_joint(full, 0.0, 0.0), DimensionError);
}

TEST(Wigner, ThreeModeOrigin) {
  const HilbertSpace vib = HilbertSpace::vibrational({12, 12, 12});
  const DensityMatrix rho = DensityMatrix::from_pure(cat_state(vib, 1.0, ParitySign::kOdd));
  const double bound = std::pow(2.0 / std::numbers::pi, 3);
  EXPECT_NEAR(wigner_triple_origin(rho), -bound, 1e-10);
}

TEST(Wigner, WriterFormats) {
  const DensityMatrix rho = vib_cat(10, 0.7, ParitySign::kEven);
  WignerGrid grid = wigner_plane_cut(rho, -0.5, 0.5, 3);
  grid.provenance = "unit";
  grid.alpha_reference = 0.7;
  const GridMetadata meta{"0123", "2026-01-01T00:00:00Z"};

  std::ostringstream table;
  write_wigner_table(table, grid, meta);
  const std::string t = table.str();
  EXPECT_NE(t.find("# provenance: unit"), std::string::npos);
  EXPECT_NE(t.find("# alpha_reference: 0.69999999999999996"), std::string::npos);
  EXPECT_NE(t.find("# scenario_hash: 0123"), std::string::npos);
  EXPECT_NE(t.find("y1,y2,W\n"), std::string::npos);
  int rows = 0;
  std::istringstream in(t);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#' && line[0] != 'y') ++rows;
  }
  EXPECT_EQ(rows, 9);

  std::ostringstream matrix;
  write_wigner_matrix(matrix, grid, meta);
  EXPECT_NE(matrix.str().find("y1\\y2"), std::string::npos);
}

}  // namespace
}  // namespace catstab
