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

#include <cmath>
#include <unordered_map>

#include "catstab/dynamics.hpp"

namespace catstab {

LindbladGenerator::LindbladGenerator(const OperatorMatrix& hamiltonian,
                                     const std::vector<JumpOperator>& jumps)
    : space_(hamiltonian.space()), hamiltonian_(hamiltonian.entries()) {
  SparseMatrix effective = hamiltonian_;
  for (const auto& j : jumps) {
    require_same_space(space_, j.op.space(), "LindbladGenerator");
    if (j.rate < 0.0) throw NumericalError("negative rate for jump operator " + j.label);
    if (j.rate == 0.0) continue;
    const SparseMatrix l = std::sqrt(j.rate) * j.op.entries();
    const SparseMatrix ld = l.adjoint();
    effective = effective - Complex(0.0, 0.5) * SparseMatrix(ld * l);
    scaled_jumps_.push_back(l);
    scaled_jumps_adjoint_.push_back(ld);
  }
  effective.prune(Complex(0.0));
  effective_adjoint_ = effective.adjoint();
  effective_adjoint_.makeCompressed();
}

void LindbladGenerator::apply(const Matrix& rho, Matrix& drho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw DimensionError("lindblad rhs: density matrix shape does not match the generator");
  }
  // Scratch reused across calls: fresh buffers of this size cost page faults.
  thread_local Matrix y;
  thread_local Matrix z;
  thread_local Matrix zd;
  // rho H_eff^dag; its adjoint is H_eff rho because rho is Hermitian.
  y.noalias() = rho * effective_adjoint_;
  drho.resize(dim(), dim());
  drho.noalias() = kI * y;
  drho.noalias() -= kI * y.adjoint();
  for (std::size_t k = 0; k < scaled_jumps_.size(); ++k) {
    // z = rho L^dag, z^dag L^dag = L rho L^dag.
    z.noalias() = rho * scaled_jumps_adjoint_[k];
    zd.noalias() = z.adjoint();
    drho.noalias() += zd * scaled_jumps_adjoint_[k];
  }
}

Matrix LindbladGenerator::operator()(const Matrix& rho) const {
  Matrix out;
  apply(rho, out);
  return out;
}

Matrix LindbladGenerator::superoperator(const std::vector<std::pair<Index, Index>>& pairs) const {
  const Index n = dim();
  std::unordered_map<Index, Index> position;
  position.reserve(pairs.size() * 2);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    position.emplace(pairs[k].first * n + pairs[k].second, static_cast<Index>(k));
  }
  const auto m = static_cast<Index>(pairs.size());
  Matrix super = Matrix::Zero(m, m);
  auto add = [&](Index row_i, Index row_j, Index col, Complex v) {
    auto it = position.find(row_i * n + row_j);
    if (it == position.end()) {
      if (std::abs(v) > 0.0) {
        throw NumericalError("generator leaks out of the restricted operator subspace");
      }
      return;
    }
    super(it->second, col) += v;
  };

  const SparseMatrix effective = effective_adjoint_.adjoint();

  for (Index col = 0; col < m; ++col) {
    const Index c = pairs[static_cast<std::size_t>(col)].first;
    const Index d = pairs[static_cast<std::size_t>(col)].second;
    // -i H_eff E_cd: entries (a, d) with H_eff(a, c).
    for (SparseMatrix::InnerIterator it(effective, c); it; ++it) {
      add(it.row(), d, col, -kI * it.value());
    }
    // i E_cd H_eff^dag: entries (c, b) with conj(H_eff(b, d)).
    for (SparseMatrix::InnerIterator it(effective, d); it; ++it) {
      add(c, it.row(), col, kI * std::conj(it.value()));
    }
    // L E_cd L^dag: entries (a, b) with L(a, c) conj(L(b, d)).
    for (const auto& l : scaled_jumps_) {
      for (SparseMatrix::InnerIterator ia(l, c); ia; ++ia) {
        for (SparseMatrix::InnerIterator ib(l, d); ib; ++ib) {
          add(ia.row(), ib.row(), col, ia.value() * std::conj(ib.value()));
        }
      }
    }
  }
  return super;
}

namespace {

// Returns +1 if `op` preserves every parity sector, -1 if it flips every
// sector, 0 if it mixes.
int parity_action(const HilbertSpace& space, const SparseMatrix& op) {
  int action = 1;
  bool seen = false;
  for (Index k = 0; k < op.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op, k); it; ++it) {
      if (it.value() == Complex(0.0)) continue;
      const int rel = space.phonon_parity(it.row()) * space.phonon_parity(it.col());
      if (!seen) {
        action = rel;
        seen = true;
      } else if (rel != action) {
        return 0;
      }
    }
  }
  return action;
}

}  // namespace

bool LindbladGenerator::respects_parity_blocks() const {
  if (parity_action(space_, hamiltonian_) != 1) return false;
  for (const auto& l : scaled_jumps_) {
    if (parity_action(space_, l) == 0) return false;
  }
  return true;
}

bool LindbladGenerator::preserves_parity() const {
  if (parity_action(space_, hamiltonian_) != 1) return false;
  for (const auto& l : scaled_jumps_) {
    if (parity_action(space_, l) != 1) return false;
  }
  return true;
}

Matrix lindblad_rhs(const DensityMatrix& rho, const OperatorMatrix& hamiltonian,
                    const std::vector<JumpOperator>& jumps) {
  require_same_space(rho.space(), hamiltonian.space(), "lindblad_rhs");
  const LindbladGenerator gen(hamiltonian, jumps);
  Matrix out;
  gen.apply(rho.entries(), out);
  return out;
}

}  // namespace catstab
