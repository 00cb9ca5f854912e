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

#include "catstab/operators.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace catstab {

using Triplet = Eigen::Triplet<Complex>;

OperatorMatrix::OperatorMatrix(HilbertSpace space, SparseMatrix entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows() != space_.total_dim() || entries_.cols() != space_.total_dim()) {
    throw DimensionError("operator of shape " + std::to_string(entries_.rows()) + "x" +
                         std::to_string(entries_.cols()) + " does not match space " +
                         space_.describe());
  }
  entries_.makeCompressed();
}

OperatorMatrix OperatorMatrix::identity(const HilbertSpace& space) {
  SparseMatrix id(space.total_dim(), space.total_dim());
  id.setIdentity();
  return {space, std::move(id)};
}

OperatorMatrix OperatorMatrix::zero(const HilbertSpace& space) {
  return {space, SparseMatrix(space.total_dim(), space.total_dim())};
}

OperatorMatrix OperatorMatrix::from_dense(HilbertSpace space, const Matrix& dense, double drop_tol) {
  SparseMatrix sp = dense.sparseView(1.0, drop_tol);
  return {std::move(space), std::move(sp)};
}

Complex OperatorMatrix::element(Index row, Index col) const {
  if (row < 0 || col < 0 || row >= dim() || col >= dim()) {
    throw DimensionError("operator element index out of range");
  }
  return entries_.coeff(row, col);
}

OperatorMatrix OperatorMatrix::adjoint() const {
  SparseMatrix adj = entries_.adjoint();
  return {space_, std::move(adj)};
}

double OperatorMatrix::max_abs() const {
  double m = 0.0;
  for (Index k = 0; k < entries_.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(entries_, k); it; ++it) m = std::max(m, std::abs(it.value()));
  }
  return m;
}

bool OperatorMatrix::is_hermitian(double tol) const {
  SparseMatrix diff = entries_ - SparseMatrix(entries_.adjoint());
  for (Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      if (std::abs(it.value()) > tol) return false;
    }
  }
  return true;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_space(space_, rhs.space_, "operator +");
  entries_ = entries_ + rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_space(space_, rhs.space_, "operator -");
  entries_ = entries_ - rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  entries_ *= scale;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space_, rhs.space_, "operator *");
  SparseMatrix prod = (lhs.entries_ * rhs.entries_).pruned();
  return {lhs.space_, std::move(prod)};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

OperatorMatrix power(const OperatorMatrix& op, int exponent) {
  if (exponent < 0) throw DimensionError("negative operator power");
  OperatorMatrix result = OperatorMatrix::identity(op.space());
  for (int k = 0; k < exponent; ++k) result = result * op;
  return result;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (Index kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          trips.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
        }
      }
    }
  }
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

namespace fock {

SparseMatrix annihilation(int dim) {
  std::vector<Triplet> trips;
  for (int n = 1; n < dim; ++n) trips.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  SparseMatrix a(dim, dim);
  a.setFromTriplets(trips.begin(), trips.end());
  return a;
}

SparseMatrix creation(int dim) { return SparseMatrix(annihilation(dim).adjoint()); }

SparseMatrix number(int dim) {
  std::vector<Triplet> trips;
  for (int n = 1; n < dim; ++n) trips.emplace_back(n, n, static_cast<double>(n));
  SparseMatrix num(dim, dim);
  num.setFromTriplets(trips.begin(), trips.end());
  return num;
}

SparseMatrix parity(int dim) {
  std::vector<Triplet> trips;
  for (int n = 0; n < dim; ++n) trips.emplace_back(n, n, n % 2 == 0 ? 1.0 : -1.0);
  SparseMatrix p(dim, dim);
  p.setFromTriplets(trips.begin(), trips.end());
  return p;
}

SparseMatrix identity(int dim) {
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

void check_truncation(int dim, Complex amplitude, int mode_index) {
  const double a2 = std::norm(amplitude);
  if (a2 > max_amplitude_squared(dim)) {
    std::ostringstream os;
    os << "mode " << mode_index << ": |amplitude|^2 = " << a2 << " exceeds truncation limit "
       << max_amplitude_squared(dim) << " (dim " << dim << ")";
    throw TruncationError(mode_index, os.str());
  }
}

Matrix displacement(int dim, Complex beta) {
  const Matrix a = Matrix(annihilation(dim));
  const Matrix generator = beta * a.adjoint() - std::conj(beta) * a;
  return generator.exp();
}

Matrix displaced_parity(int dim, Complex beta) {
  // D(b) P D(b)^dag = D(2b) P; the enlarged space keeps the dim x dim block exact
  // to well below double-precision noise for the amplitudes the guard admits.
  const double r = std::abs(beta);
  const int padded =
      dim + 32 + static_cast<int>(std::ceil(16.0 * r * std::sqrt(static_cast<double>(dim)) + 8.0 * r * r));
  const Matrix d2 = displacement(padded, 2.0 * beta);
  Matrix block = d2.topLeftCorner(dim, dim);
  for (int n = 1; n < dim; n += 2) block.col(n) *= -1.0;
  return block;
}

}  // namespace fock

OperatorMatrix embed_mode_operator(const HilbertSpace& space, int mode_index,
                                   const SparseMatrix& single_mode) {
  const int dim = space.mode_dim(mode_index);
  if (single_mode.rows() != dim || single_mode.cols() != dim) {
    throw DimensionError("single-mode operator dimension does not match mode " +
                         std::to_string(mode_index));
  }
  const Index before = space.internal_levels() * (space.vibrational_dim() / (dim * space.mode_stride(mode_index)));
  const Index after = space.mode_stride(mode_index);
  SparseMatrix full = kron(kron(fock::identity(static_cast<int>(before)), single_mode),
                           fock::identity(static_cast<int>(after)));
  return {space, std::move(full)};
}

OperatorMatrix embed_internal_operator(const HilbertSpace& space, const Eigen::Matrix2cd& op) {
  if (!space.has_internal()) throw DimensionError("space has no internal factor");
  SparseMatrix small = op.sparseView();
  SparseMatrix full = kron(small, fock::identity(static_cast<int>(space.vibrational_dim())));
  return {space, std::move(full)};
}

OperatorMatrix annihilation(const HilbertSpace& space, int mode_index) {
  return embed_mode_operator(space, mode_index, fock::annihilation(space.mode_dim(mode_index)));
}

OperatorMatrix creation(const HilbertSpace& space, int mode_index) {
  return embed_mode_operator(space, mode_index, fock::creation(space.mode_dim(mode_index)));
}

OperatorMatrix number(const HilbertSpace& space, int mode_index) {
  return embed_mode_operator(space, mode_index, fock::number(space.mode_dim(mode_index)));
}

OperatorMatrix internal_op(const HilbertSpace& space, InternalOp which) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (which) {
    case InternalOp::kRaise:
      m(kExcited, kGround) = 1.0;
      break;
    case InternalOp::kLower:
      m(kGround, kExcited) = 1.0;
      break;
    case InternalOp::kInversion:
      m(kExcited, kExcited) = 0.5;
      m(kGround, kGround) = -0.5;
      break;
  }
  return embed_internal_operator(space, m);
}

OperatorMatrix internal_projector(const HilbertSpace& space, int level) {
  if (level != kGround && level != kExcited) throw DimensionError("internal level out of range");
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(level, level) = 1.0;
  return embed_internal_operator(space, m);
}

OperatorMatrix total_parity(const HilbertSpace& space) {
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(space.total_dim()));
  for (Index i = 0; i < space.total_dim(); ++i) {
    trips.emplace_back(i, i, static_cast<double>(space.phonon_parity(i)));
  }
  SparseMatrix p(space.total_dim(), space.total_dim());
  p.setFromTriplets(trips.begin(), trips.end());
  return {space, std::move(p)};
}

OperatorMatrix displacement(const HilbertSpace& space, int mode_index, Complex beta) {
  const int dim = space.mode_dim(mode_index);
  fock::check_truncation(dim, beta, mode_index);
  SparseMatrix d = fock::displacement(dim, beta).sparseView(1.0, 0.0);
  return embed_mode_operator(space, mode_index, d);
}

}  // namespace catstab
