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

#ifndef CATSTAB_OPERATORS_HPP
#define CATSTAB_OPERATORS_HPP

#include "catstab/hilbert_space.hpp"
#include "catstab/types.hpp"

namespace catstab {

/// Operator on a HilbertSpace.
///
/// Entries are held in a sparse container; every operator the scheme needs
/// (ladder products, projectors, parity) is banded, and the dense form is
/// available through `dense()` when a caller wants it.
class OperatorMatrix {
 public:
  OperatorMatrix(HilbertSpace space, SparseMatrix entries);

  static OperatorMatrix identity(const HilbertSpace& space);
  static OperatorMatrix zero(const HilbertSpace& space);
  static OperatorMatrix from_dense(HilbertSpace space, const Matrix& dense, double drop_tol = 0.0);

  const HilbertSpace& space() const noexcept { return space_; }
  const SparseMatrix& entries() const noexcept { return entries_; }
  Index dim() const noexcept { return entries_.rows(); }
  Matrix dense() const { return Matrix(entries_); }
  Complex element(Index row, Index col) const;

  OperatorMatrix adjoint() const;
  /// Largest absolute entry.
  double max_abs() const;
  bool is_hermitian(double tol) const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(Complex scale);

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
  friend OperatorMatrix operator*(OperatorMatrix lhs, Complex scale) { return lhs *= scale; }
  friend OperatorMatrix operator*(Complex scale, OperatorMatrix rhs) { return rhs *= scale; }
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

 private:
  HilbertSpace space_;
  SparseMatrix entries_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Integer power (exponent >= 0).
OperatorMatrix power(const OperatorMatrix& op, int exponent);

/// Kronecker products; the left factor is the slow index.
Matrix kron(const Matrix& a, const Matrix& b);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Single-mode matrices on a Fock space of dimension `dim`.
namespace fock {

SparseMatrix annihilation(int dim);
SparseMatrix creation(int dim);
SparseMatrix number(int dim);
SparseMatrix parity(int dim);
SparseMatrix identity(int dim);

/// Largest |amplitude|^2 a mode of dimension `dim` accepts.
inline double max_amplitude_squared(int dim) { return dim / 4.0; }

/// Throws TruncationError when |amplitude|^2 > dim / 4.
void check_truncation(int dim, Complex amplitude, int mode_index);

/// exp(beta a^dag - beta^* a) on the truncated space (Pade scaling and squaring).
Matrix displacement(int dim, Complex beta);

/// Block of D(beta) (-1)^{a^dag a} D(beta)^dag on the first `dim` Fock states,
/// computed on an enlarged space so the block is free of cutoff artefacts.
Matrix displaced_parity(int dim, Complex beta);

}  // namespace fock

/// Lift a single-mode matrix to the full space (identity on everything else).
OperatorMatrix embed_mode_operator(const HilbertSpace& space, int mode_index,
                                   const SparseMatrix& single_mode);

/// Lift a 2x2 internal matrix to the full space.
OperatorMatrix embed_internal_operator(const HilbertSpace& space, const Eigen::Matrix2cd& op);

OperatorMatrix annihilation(const HilbertSpace& space, int mode_index);
OperatorMatrix creation(const HilbertSpace& space, int mode_index);
OperatorMatrix number(const HilbertSpace& space, int mode_index);

enum class InternalOp { kRaise, kLower, kInversion };

/// S+ = |e><g|, S- = |g><e|, S_z = (|e><e| - |g><g|) / 2.
OperatorMatrix internal_op(const HilbertSpace& space, InternalOp which);

/// Projector onto an internal level.
OperatorMatrix internal_projector(const HilbertSpace& space, int level);

/// (-1)^(sum of all phonon numbers), identity on the internal factor.
OperatorMatrix total_parity(const HilbertSpace& space);

/// Displacement of one mode; guarded by |beta|^2 <= dim / 4.
OperatorMatrix displacement(const HilbertSpace& space, int mode_index, Complex beta);

}  // namespace catstab

#endif  // CATSTAB_OPERATORS_HPP
