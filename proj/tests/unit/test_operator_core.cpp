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

#include "catstab/dump.hpp"
#include "catstab/states.hpp"
#include "oracles.hpp"

namespace catstab {
namespace {

TEST(HilbertSpace, InternalMajorOrdering) {
  const HilbertSpace space({3, 4});
  EXPECT_EQ(space.total_dim(), 24);
  EXPECT_EQ(space.vibrational_dim(), 12);
  const std::vector<int> occ{2, 1};
  EXPECT_EQ(space.index(kGround, occ), 2 * 4 + 1);
  EXPECT_EQ(space.index(kExcited, occ), 12 + 2 * 4 + 1);
  EXPECT_EQ(space.mode_stride(0), 4);
  EXPECT_EQ(space.mode_stride(1), 1);
}

TEST(HilbertSpace, LabelInvertsIndex) {
  const HilbertSpace space({3, 5, 2});
  for (Index i = 0; i < space.total_dim(); ++i) {
    const auto lab = space.label(i);
    EXPECT_EQ(space.index(lab.internal, lab.occupations), i);
    int total = 0;
    for (int n : lab.occupations) total += n;
    EXPECT_EQ(space.phonon_number(i), total);
    EXPECT_EQ(space.phonon_parity(i), total % 2 == 0 ? 1 : -1);
  }
}

TEST(HilbertSpace, RejectsBadInput) {
  EXPECT_THROW(HilbertSpace({}), DimensionError);
  EXPECT_THROW(HilbertSpace({0, 3}), DimensionError);
  const HilbertSpace space({3, 3});
  const std::vector<int> too_many{0, 0, 0};
  const std::vector<int> too_high{3, 0};
  EXPECT_THROW(space.index(kGround, too_many), DimensionError);
  EXPECT_THROW(space.index(kGround, too_high), DimensionError);
  EXPECT_THROW(space.label(18), DimensionError);
}

TEST(HilbertSpace, VibrationalSpaceDropsInternalFactor) {
  const HilbertSpace space({4, 4});
  const HilbertSpace vib = space.vibrational_space();
  EXPECT_FALSE(vib.has_internal());
  EXPECT_EQ(vib.total_dim(), 16);
  EXPECT_EQ(vib.with_internal(), space);
}

TEST(Fock, CommutatorIsIdentityExceptCorner) {
  for (int dim : {2, 5, 12}) {
    const Matrix a = Matrix(fock::annihilation(dim));
    const Matrix ad = Matrix(fock::creation(dim));
    const Matrix comm = a * ad - ad * a;
    Matrix expected = Matrix::Identity(dim, dim);
    expected(dim - 1, dim - 1) = 1.0 - dim;
    EXPECT_LT((comm - expected).cwiseAbs().maxCoeff(), 1e-13) << "dim " << dim;
  }
}

TEST(Fock, LadderMatchesReference) {
  const int dim = 7;
  EXPECT_LT(oracle::max_abs(Matrix(fock::annihilation(dim)) - oracle::lower(dim)), 1e-15);
  EXPECT_LT(oracle::max_abs(Matrix(fock::creation(dim)) - oracle::lower(dim).adjoint()), 1e-15);
  const Matrix n = Matrix(fock::number(dim));
  const Matrix p = Matrix(fock::parity(dim));
  for (int k = 0; k < dim; ++k) {
    EXPECT_DOUBLE_EQ(n(k, k).real(), k);
    EXPECT_DOUBLE_EQ(p(k, k).real(), k % 2 == 0 ? 1.0 : -1.0);
  }
}

TEST(Operators, EmbeddingMatchesKroneckerProducts) {
  const HilbertSpace space({3, 4});
  const auto ref = oracle::two_mode_ops(3, 4);
  EXPECT_LT(oracle::max_abs(annihilation(space, 0).dense() - ref.a), 1e-15);
  EXPECT_LT(oracle::max_abs(annihilation(space, 1).dense() - ref.b), 1e-15);
  EXPECT_LT(oracle::max_abs(internal_op(space, InternalOp::kRaise).dense() - ref.sp), 1e-15);
  EXPECT_LT(oracle::max_abs(internal_op(space, InternalOp::kLower).dense() - ref.sp.adjoint()), 1e-15);
  EXPECT_LT(oracle::max_abs(internal_op(space, InternalOp::kInversion).dense() - ref.sz), 1e-15);
}

TEST(Operators, ModesCommute) {
  const HilbertSpace space({4, 5});
  const OperatorMatrix a = annihilation(space, 0);
  const OperatorMatrix bd = creation(space, 1);
  EXPECT_LT(commutator(a, bd).max_abs(), 1e-15);
  EXPECT_LT(commutator(a, internal_op(space, InternalOp::kRaise)).max_abs(), 1e-15);
}

TEST(Operators, KronMatchesReference) {
  const Matrix a = oracle::random_hermitian(3, 1);
  const Matrix b = oracle::random_hermitian(4, 2);
  EXPECT_LT(oracle::max_abs(kron(a, b) - oracle::kron(a, b)), 1e-14);
  const SparseMatrix sa = a.sparseView();
  const SparseMatrix sb = b.sparseView();
  EXPECT_LT(oracle::max_abs(Matrix(kron(sa, sb)) - oracle::kron(a, b)), 1e-14);
}

TEST(Operators, AlgebraAndPower) {
  const HilbertSpace space({5});
  const OperatorMatrix a = annihilation(space, 0);
  const OperatorMatrix a3 = power(a, 3);
  EXPECT_LT(oracle::max_abs((a3 - a * a * a).dense()), 1e-14);
  EXPECT_LT(oracle::max_abs((power(a, 0) - OperatorMatrix::identity(space)).dense()), 0.0 + 1e-15);
  EXPECT_THROW(power(a, -1), DimensionError);
  const OperatorMatrix n = number(space, 0);
  EXPECT_LT(oracle::max_abs((n - creation(space, 0) * a).dense()), 1e-14);
  EXPECT_TRUE(n.is_hermitian(1e-15));
  EXPECT_FALSE(a.is_hermitian(1e-3));
  EXPECT_THROW(a + annihilation(HilbertSpace({4}), 0), DimensionError);
}

TEST(Operators, TotalParityMatchesExponential) {
  const HilbertSpace space({3, 4});
  const Matrix p = total_parity(space).dense();
  for (Index i = 0; i < space.total_dim(); ++i) EXPECT_DOUBLE_EQ(p(i, i).real(), space.phonon_parity(i));
  EXPECT_LT(oracle::max_abs(p * p - Matrix::Identity(24, 24)), 1e-15);
}

TEST(Displacement, VacuumGoesToCoherentState) {
  const int dim = 40;
  const Complex beta(1.1, -0.7);
  const Matrix d = fock::displacement(dim, beta);
  const Vector col0 = d.col(0);
  // Far from the cutoff the truncated exponential reproduces the Poisson amplitudes.
  EXPECT_LT((col0.head(20) - oracle::coherent(dim, beta).head(20)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Displacement, DisplacedParityAtOriginIsParity) {
  const Matrix m = fock::displaced_parity(8, Complex(0.0));
  EXPECT_LT(oracle::max_abs(m - Matrix(fock::parity(8))), 1e-12);
}

TEST(Displacement, DisplacedParityMatchesLargeSpaceReference) {
  const int dim = 12;
  const Complex beta(0.3, 0.8);
  // Independent reference: D on a much larger space, conjugate parity, crop.
  const int big = 120;
  const Matrix d = fock::displacement(big, beta);
  const Matrix full = d * Matrix(fock::parity(big)) * d.adjoint();
  const Matrix ref = full.topLeftCorner(dim, dim);
  EXPECT_LT(oracle::max_abs(fock::displaced_parity(dim, beta) - ref), 1e-10);
}

TEST(Displacement, TruncationGuard) {
  EXPECT_NO_THROW(fock::check_truncation(16, Complex(2.0, 0.0), 0));
  try {
    fock::check_truncation(16, Complex(2.1, 0.0), 1);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.mode_index(), 1);
  }
  const HilbertSpace space({16, 8});
  EXPECT_THROW(displacement(space, 1, Complex(1.5, 0.0)), TruncationError);
}

TEST(States, CoherentAmplitudesMatchPoisson) {
  const Complex alpha(1.2, 0.4);
  const Vector v = coherent_amplitudes(30, alpha);
  EXPECT_LT((v - oracle::coherent(30, alpha)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(v.norm(), 1.0, 1e-14);
}

TEST(States, CoherentOverlapAtAlphaTwo) {
  const HilbertSpace vib = HilbertSpace::vibrational({30});
  const std::vector<Complex> plus{2.0};
  const std::vector<Complex> minus{-2.0};
  const Complex overlap = inner_product(coherent_state(vib, plus), coherent_state(vib, minus));
  EXPECT_NEAR(overlap.real(), std::exp(-8.0), 1e-12);
  EXPECT_NEAR(overlap.imag(), 0.0, 1e-15);
}

TEST(States, CatNormalizationMatchesClosedForm) {
  const HilbertSpace vib = HilbertSpace::vibrational({30, 30});
  for (ParitySign s : {ParitySign::kEven, ParitySign::kOdd}) {
    const double alpha = 0.6;
    const std::vector<Complex> plus{alpha, alpha};
    const std::vector<Complex> minus{-alpha, -alpha};
    const Vector raw = coherent_state(vib, plus).amplitudes() +
                       static_cast<double>(static_cast<int>(s)) * coherent_state(vib, minus).amplitudes();
    EXPECT_NEAR(1.0 / raw.norm(), cat_normalization(alpha, 2, s), 1e-12);
    const Vector ref = oracle::two_mode_cat(30, 30, alpha, static_cast<int>(s));
    EXPECT_NEAR(std::abs(ref.dot(cat_state(vib, alpha, s).amplitudes())), 1.0, 1e-12);
  }
}

TEST(States, VacuumFidelityToEvenCat) {
  // |<0,0|psi+>|^2 = 4 N^2 exp(-8) for alpha = 2.
  const HilbertSpace space({30, 30});
  const std::vector<int> zeros{0, 0};
  const DensityMatrix rho = DensityMatrix::from_pure(fock_state(space, zeros));
  const StateVector cat = cat_state(space, 2.0, ParitySign::kEven);
  const double n2 = 1.0 / (2.0 + 2.0 * std::exp(-16.0));
  const double expected = 4.0 * n2 * std::exp(-8.0);
  EXPECT_NEAR(expected, 6.7093e-4, 1e-7);
  const Vector& v = cat.amplitudes();
  EXPECT_NEAR(v.dot(rho.entries() * v).real(), expected, 1e-12);
}

TEST(States, CatParityEigenstate) {
  const HilbertSpace space({20, 20});
  const OperatorMatrix p = total_parity(space);
  EXPECT_NEAR(expectation(cat_state(space, 1.5, ParitySign::kEven), p).real(), 1.0, 1e-12);
  EXPECT_NEAR(expectation(cat_state(space, 1.5, ParitySign::kOdd), p).real(), -1.0, 1e-12);
  EXPECT_THROW(cat_state(space, 0.0, ParitySign::kOdd), NumericalError);
  EXPECT_NO_THROW(cat_state(space, 0.0, ParitySign::kEven));
}

TEST(States, SymmetricOnePhonon) {
  const HilbertSpace space({3, 3});
  const StateVector psi = symmetric_one_phonon(space);
  const std::vector<int> o10{1, 0};
  const std::vector<int> o01{0, 1};
  EXPECT_NEAR(psi.amplitudes()(space.index(kGround, o10)).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi.amplitudes()(space.index(kGround, o01)).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
}

TEST(DensityMatrix, ValidateAndPurity) {
  const HilbertSpace space({4});
  const StateVector psi = coherent_state(space, std::vector<Complex>{Complex(0.5, 0.2)});
  const DensityMatrix pure = DensityMatrix::from_pure(psi);
  EXPECT_NO_THROW(pure.validate());
  EXPECT_NEAR(pure.purity(), 1.0, 1e-14);
  EXPECT_NEAR(pure.trace().real(), 1.0, 1e-14);

  const DensityMatrix mixed(space, Matrix::Identity(8, 8) / 8.0);
  EXPECT_NEAR(mixed.purity(), 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(mixed.min_eigenvalue(), 1.0 / 8.0, 1e-14);

  Matrix bad = Matrix::Identity(8, 8) / 8.0;
  bad(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(space, bad).validate(), NumericalError);
  Matrix neg = Matrix::Zero(8, 8);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(space, neg).validate(), NumericalError);
  EXPECT_THROW(DensityMatrix(space, Matrix::Identity(8, 8)).validate(), NumericalError);
}

TEST(Dump, RoundTripIsExact) {
  const HilbertSpace space({3, 2});
  const DensityMatrix rho(space, oracle::random_density(12, 7));
  std::stringstream ss;
  dump::write(ss, rho);
  const DensityMatrix back = dump::read_density_matrix(ss);
  EXPECT_EQ(back.space(), space);
  EXPECT_EQ((back.entries() - rho.entries()).cwiseAbs().maxCoeff(), 0.0);

  const StateVector psi = cat_state(space, 0.4, ParitySign::kOdd);
  std::stringstream sv;
  dump::write(sv, psi);
  EXPECT_EQ((dump::read_state_vector(sv).amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 0.0);

  std::stringstream wrong;
  dump::write(wrong, psi);
  EXPECT_THROW(dump::read_density_matrix(wrong), DimensionError);
}

}  // namespace
}  // namespace catstab
