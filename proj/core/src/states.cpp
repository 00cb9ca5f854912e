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

#include "catstab/states.hpp"

#include <cmath>
#include <sstream>

namespace catstab {

StateVector::StateVector(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) {
    throw DimensionError("state of length " + std::to_string(amplitudes_.size()) +
                         " does not match space " + space_.describe());
  }
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericalError("cannot normalize the zero vector");
  return {space_, amplitudes_ / n};
}

StateVector StateVector::vibrational_component(int internal_level) const {
  if (!space_.has_internal()) return *this;
  const Index vd = space_.vibrational_dim();
  return {space_.vibrational_space(), amplitudes_.segment(internal_level * vd, vd)};
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows() != space_.total_dim() || entries_.cols() != space_.total_dim()) {
    throw DimensionError("density matrix shape does not match space " + space_.describe());
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const Vector& v = psi.amplitudes();
  return {psi.space(), v * v.adjoint()};
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

double DensityMatrix::hermiticity_error() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(const DensityTolerances& tol) const {
  std::ostringstream os;
  const double herm = hermiticity_error();
  if (herm > tol.hermiticity) {
    os << "density matrix not Hermitian (max |rho - rho^dag| = " << herm << ")";
    throw NumericalError(os.str());
  }
  const Complex tr = trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    os << "density matrix trace " << tr.real() << " deviates from 1";
    throw NumericalError(os.str());
  }
  const double lmin = min_eigenvalue();
  if (lmin < tol.min_eigenvalue) {
    os << "density matrix has negative eigenvalue " << lmin;
    throw NumericalError(os.str());
  }
}

StateVector fock_state(const HilbertSpace& space, std::span<const int> occupations, int internal) {
  Vector amps = Vector::Zero(space.total_dim());
  amps(space.index(space.has_internal() ? internal : 0, occupations)) = 1.0;
  return {space, std::move(amps)};
}

Vector coherent_amplitudes(int dim, Complex alpha) {
  Vector c(dim);
  // alpha^n / sqrt(n!) by recurrence; the e^{-|alpha|^2/2} prefactor drops out on renormalization.
  c(0) = 1.0;
  for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return c / c.norm();
}

namespace {

// Kronecker product of per-mode vectors, internal factor prepended.
Vector product_state(const HilbertSpace& space, const std::vector<Vector>& factors, int internal) {
  Vector vib(1);
  vib(0) = 1.0;
  for (const auto& f : factors) {
    Vector next(vib.size() * f.size());
    for (Index i = 0; i < vib.size(); ++i) next.segment(i * f.size(), f.size()) = vib(i) * f;
    vib = std::move(next);
  }
  if (!space.has_internal()) return vib;
  Vector full = Vector::Zero(space.total_dim());
  full.segment(internal * space.vibrational_dim(), space.vibrational_dim()) = vib;
  return full;
}

}  // namespace

StateVector coherent_state(const HilbertSpace& space, std::span<const Complex> alphas, int internal) {
  if (static_cast<int>(alphas.size()) != space.mode_count()) {
    throw DimensionError("coherent_state needs one amplitude per mode");
  }
  std::vector<Vector> factors;
  for (int m = 0; m < space.mode_count(); ++m) {
    fock::check_truncation(space.mode_dim(m), alphas[static_cast<std::size_t>(m)], m);
    factors.push_back(coherent_amplitudes(space.mode_dim(m), alphas[static_cast<std::size_t>(m)]));
  }
  return StateVector(space, product_state(space, factors, internal)).normalized();
}

StateVector cat_state(const HilbertSpace& space, Complex alpha, ParitySign sign) {
  if (sign == ParitySign::kOdd && alpha == Complex(0.0)) {
    throw NumericalError("odd cat state with alpha = 0 is the zero vector");
  }
  const std::vector<Complex> plus(static_cast<std::size_t>(space.mode_count()), alpha);
  const std::vector<Complex> minus(static_cast<std::size_t>(space.mode_count()), -alpha);
  const StateVector a = coherent_state(space, plus);
  const StateVector b = coherent_state(space, minus);
  const double s = static_cast<double>(static_cast<int>(sign));
  return StateVector(space, a.amplitudes() + s * b.amplitudes()).normalized();
}

double cat_normalization(Complex alpha, int mode_count, ParitySign sign) {
  const double overlap = std::exp(-2.0 * mode_count * std::norm(alpha));
  const double s = static_cast<double>(static_cast<int>(sign));
  return 1.0 / std::sqrt(2.0 + 2.0 * s * overlap);
}

StateVector symmetric_one_phonon(const HilbertSpace& space, int internal) {
  Vector amps = Vector::Zero(space.total_dim());
  std::vector<int> occ(static_cast<std::size_t>(space.mode_count()), 0);
  for (int m = 0; m < space.mode_count(); ++m) {
    occ.assign(occ.size(), 0);
    occ[static_cast<std::size_t>(m)] = 1;
    amps(space.index(space.has_internal() ? internal : 0, occ)) = 1.0;
  }
  return StateVector(space, std::move(amps)).normalized();
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  require_same_space(bra.space(), ket.space(), "inner_product");
  return bra.amplitudes().dot(ket.amplitudes());
}

Complex expectation(const StateVector& psi, const OperatorMatrix& op) {
  require_same_space(psi.space(), op.space(), "expectation");
  return psi.amplitudes().dot(op.entries() * psi.amplitudes());
}

Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op) {
  require_same_space(rho.space(), op.space(), "expectation");
  // Tr(rho O) = sum_{ij} rho_ji O_ij.
  Complex acc = 0.0;
  const SparseMatrix& o = op.entries();
  const Matrix& r = rho.entries();
  for (Index k = 0; k < o.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(o, k); it; ++it) acc += r(it.col(), it.row()) * it.value();
  }
  return acc;
}

StateVector apply(const OperatorMatrix& op, const StateVector& psi) {
  require_same_space(op.space(), psi.space(), "apply");
  return {psi.space(), op.entries() * psi.amplitudes()};
}

}  // namespace catstab
