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

#ifndef CATSTAB_STATES_HPP
#define CATSTAB_STATES_HPP

#include <span>
#include <vector>

#include "catstab/hilbert_space.hpp"
#include "catstab/operators.hpp"
#include "catstab/types.hpp"

namespace catstab {

class StateVector {
 public:
  StateVector(HilbertSpace space, Vector amplitudes);

  const HilbertSpace& space() const noexcept { return space_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Index dim() const noexcept { return amplitudes_.size(); }
  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;

  /// Amplitudes of the vibrational factor for a fixed internal level.
  StateVector vibrational_component(int internal_level) const;

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

/// Numerical tolerances used by DensityMatrix::validate.
struct DensityTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-8;
  double min_eigenvalue = -1e-8;
};

class DensityMatrix {
 public:
  DensityMatrix(HilbertSpace space, Matrix entries);

  static DensityMatrix from_pure(const StateVector& psi);

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& entries() const noexcept { return entries_; }
  Index dim() const noexcept { return entries_.rows(); }

  Complex trace() const { return entries_.trace(); }
  double purity() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// Throws NumericalError naming the violated invariant.
  void validate(const DensityTolerances& tol = {}) const;

 private:
  HilbertSpace space_;
  Matrix entries_;
};

enum class ParitySign : int { kEven = 1, kOdd = -1 };

/// |n_1, n_2, ...> with the given internal level (ignored on vibrational-only spaces).
StateVector fock_state(const HilbertSpace& space, std::span<const int> occupations,
                       int internal = kGround);

/// Truncated coherent amplitudes of a single mode, renormalized after truncation.
Vector coherent_amplitudes(int dim, Complex alpha);

/// Product of per-mode coherent states; guarded by |alpha|^2 <= dim / 4 per mode.
StateVector coherent_state(const HilbertSpace& space, std::span<const Complex> alphas,
                           int internal = kGround);

/// N (|alpha>^{(x)m} +/- |-alpha>^{(x)m}) on every mode of the space, internal |g>.
StateVector cat_state(const HilbertSpace& space, Complex alpha, ParitySign sign);

/// Closed-form normalization (2 +/- 2 exp(-2 m |alpha|^2))^{-1/2}.
double cat_normalization(Complex alpha, int mode_count, ParitySign sign);

/// (|1,0,..> + |0,1,..> + ...) / sqrt(m): one phonon shared symmetrically.
StateVector symmetric_one_phonon(const HilbertSpace& space, int internal = kGround);

Complex inner_product(const StateVector& bra, const StateVector& ket);
Complex expectation(const StateVector& psi, const OperatorMatrix& op);
/// Tr(rho op).
Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op);
StateVector apply(const OperatorMatrix& op, const StateVector& psi);

}  // namespace catstab

#endif  // CATSTAB_STATES_HPP
