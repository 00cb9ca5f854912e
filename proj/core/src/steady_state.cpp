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
#include <sstream>

#include "catstab/dynamics.hpp"

namespace catstab {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kSingularRcond = 1e-13;
constexpr double kRankThreshold = 1e-10;

// Column-stacked (row, col) pairs: col is the slow index.
std::vector<std::pair<Index, Index>> admitted_pairs(const LindbladGenerator& gen, int parity_sign) {
  const HilbertSpace& space = gen.space();
  const Index n = space.total_dim();
  const bool sector = (parity_sign == 1 || parity_sign == -1) && gen.preserves_parity();
  const bool blocks = gen.respects_parity_blocks();
  std::vector<std::pair<Index, Index>> pairs;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const int pi = space.phonon_parity(i);
      const int pj = space.phonon_parity(j);
      if (sector) {
        if (pi == parity_sign && pj == parity_sign) pairs.emplace_back(i, j);
      } else if (blocks) {
        if (pi == pj) pairs.emplace_back(i, j);
      } else {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

}  // namespace

DensityMatrix steady_state_direct(const LindbladGenerator& generator, int parity_sign, Index max_dim) {
  const HilbertSpace& space = generator.space();
  if (space.total_dim() > max_dim) {
    std::ostringstream os;
    os << "steady_state_direct: total dimension " << space.total_dim() << " exceeds guard " << max_dim;
    throw DimensionError(os.str());
  }
  const auto pairs = admitted_pairs(generator, parity_sign);
  const Matrix liouvillian = generator.superoperator(pairs);
  const auto m = static_cast<Index>(pairs.size());

  // Trace preservation makes the diagonal rows linearly dependent, so one of
  // them can be swapped for the normalization Tr(rho) = 1.
  Index anchor = -1;
  for (Index k = 0; k < m; ++k) {
    if (pairs[static_cast<std::size_t>(k)].first == pairs[static_cast<std::size_t>(k)].second) {
      anchor = k;
      break;
    }
  }
  if (anchor < 0) throw NumericalError("steady_state_direct: empty operator subspace");

  Matrix system = liouvillian;
  system.row(anchor).setZero();
  for (Index k = 0; k < m; ++k) {
    if (pairs[static_cast<std::size_t>(k)].first == pairs[static_cast<std::size_t>(k)].second) {
      system(anchor, k) = 1.0;
    }
  }
  Vector rhs = Vector::Zero(m);
  rhs(anchor) = 1.0;

  Eigen::PartialPivLU<Matrix> lu(system);
  if (!(lu.rcond() > kSingularRcond)) {
    Eigen::ColPivHouseholderQR<Matrix> qr(liouvillian);
    qr.setThreshold(kRankThreshold);
    const Index nullity = m - qr.rank();
    std::ostringstream os;
    os << "steady_state_direct: null space has dimension " << nullity
       << "; fix the parity sector or add dissipation to select a unique steady state";
    throw DegenerateSteadyStateError(nullity, os.str());
  }
  const Vector x = lu.solve(rhs);

  const Index n = space.total_dim();
  Matrix rho = Matrix::Zero(n, n);
  for (Index k = 0; k < m; ++k) {
    rho(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second) = x(k);
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();

  Matrix residual;
  generator.apply(rho, residual);
  const double res = residual.cwiseAbs().maxCoeff();
  if (res > kResidualTol) {
    std::ostringstream os;
    os << "steady_state_direct: residual " << res << " exceeds " << kResidualTol;
    throw NumericalError(os.str());
  }
  return {space, std::move(rho)};
}

DensityMatrix steady_state_direct(const ModelSpec& spec, int parity_sign, Index max_dim) {
  const LindbladGenerator gen(build_hamiltonian(spec), jump_operators(spec));
  return steady_state_direct(gen, parity_sign, max_dim);
}

}  // namespace catstab
