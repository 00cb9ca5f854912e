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

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

#include "catstab/observables.hpp"

namespace catstab {

namespace {

void require_two_mode(const DensityMatrix& rho) {
  if (rho.space().has_internal() || rho.space().mode_count() != 2) {
    throw DimensionError("joint Wigner function needs a two-mode vibrational state");
  }
}

// T[j, l] = sum_{i, k} rho[(i, j), (k, l)] Ma[k, i]: contracts mode a.
Matrix contract_first_mode(const Matrix& rho, const Matrix& ma, Index na, Index nb) {
  Matrix t = Matrix::Zero(nb, nb);
  for (Index k = 0; k < na; ++k) {
    for (Index i = 0; i < na; ++i) {
      const Complex w = ma(k, i);
      if (w == Complex(0.0)) continue;
      t.noalias() += w * rho.block(i * nb, k * nb, nb, nb);
    }
  }
  return t;
}

double finish(const Matrix& t, const Matrix& mb) {
  // sum_{j, l} T[j, l] Mb[l, j]
  const Complex w = (t.cwiseProduct(mb.transpose())).sum();
  return kTwoModeWignerBound * w.real();
}

}  // namespace

double wigner_joint(const DensityMatrix& rho_vib, Complex beta, Complex chi) {
  require_two_mode(rho_vib);
  const int na = rho_vib.space().mode_dim(0);
  const int nb = rho_vib.space().mode_dim(1);
  fock::check_truncation(na, beta, 0);
  fock::check_truncation(nb, chi, 1);
  const Matrix ma = fock::displaced_parity(na, beta);
  const Matrix mb = fock::displaced_parity(nb, chi);
  return finish(contract_first_mode(rho_vib.entries(), ma, na, nb), mb);
}

WignerGrid wigner_plane_cut(const DensityMatrix& rho_vib, double lo, double hi, int n_points,
                            int threads) {
  require_two_mode(rho_vib);
  if (n_points < 2) throw ConfigError("n_points", "a plane cut needs at least two points per axis");
  if (!(hi > lo)) throw ConfigError("window", "upper bound must exceed lower bound");
  const int na = rho_vib.space().mode_dim(0);
  const int nb = rho_vib.space().mode_dim(1);

  WignerGrid grid;
  grid.axis1.resize(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    grid.axis1[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n_points - 1);
  }
  grid.axis2 = grid.axis1;
  for (double y : grid.axis1) {
    fock::check_truncation(na, Complex(0.0, y), 0);
    fock::check_truncation(nb, Complex(0.0, y), 1);
  }

  // Displaced parities are cached per axis value.
  std::vector<Matrix> mb(static_cast<std::size_t>(n_points));
  for (int c = 0; c < n_points; ++c) {
    mb[static_cast<std::size_t>(c)] = fock::displaced_parity(nb, Complex(0.0, grid.axis2[static_cast<std::size_t>(c)]));
  }
  grid.values.resize(n_points, n_points);

  auto work = [&](int row_begin, int row_end) {
    for (int r = row_begin; r < row_end; ++r) {
      // Both axes share the same samples, so equal truncations share the cache.
      const Matrix ma = na == nb ? mb[static_cast<std::size_t>(r)]
                                 : fock::displaced_parity(na, Complex(0.0, grid.axis1[static_cast<std::size_t>(r)]));
      const Matrix t = contract_first_mode(rho_vib.entries(), ma, na, nb);
      for (int c = 0; c < n_points; ++c) grid.values(r, c) = finish(t, mb[static_cast<std::size_t>(c)]);
    }
  };

  const int workers = std::clamp(threads, 1, n_points);
  if (workers == 1) {
    work(0, n_points);
  } else {
    std::vector<std::jthread> pool;
    const int chunk = (n_points + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int b = w * chunk;
      const int e = std::min(n_points, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }
  return grid;
}

namespace {

void write_metadata(std::ostream& os, const WignerGrid& grid, const GridMetadata& meta) {
  os << "# joint Wigner plane cut W(i*y1, i*y2), Re(beta) = Re(chi) = 0\n";
  os << "# provenance: " << grid.provenance << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", grid.alpha_reference);
  os << "# alpha_reference: " << buf << '\n';
  os << "# scenario_hash: " << meta.scenario_hash << '\n';
  os << "# timestamp: " << meta.timestamp << '\n';
  os << "# n_points: " << grid.axis1.size() << '\n';
}

}  // namespace

void write_wigner_table(std::ostream& os, const WignerGrid& grid, const GridMetadata& meta) {
  write_metadata(os, grid, meta);
  os << "y1,y2,W\n";
  char buf[128];
  for (std::size_t r = 0; r < grid.axis1.size(); ++r) {
    for (std::size_t c = 0; c < grid.axis2.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.10f,%.10f,%.12e\n", grid.axis1[r], grid.axis2[c],
                    grid.values(static_cast<Index>(r), static_cast<Index>(c)));
      os << buf;
    }
  }
}

void write_wigner_matrix(std::ostream& os, const WignerGrid& grid, const GridMetadata& meta) {
  write_metadata(os, grid, meta);
  char buf[64];
  os << "y1\\y2";
  for (double y : grid.axis2) {
    std::snprintf(buf, sizeof buf, ",%.10f", y);
    os << buf;
  }
  os << '\n';
  for (std::size_t r = 0; r < grid.axis1.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.10f", grid.axis1[r]);
    os << buf;
    for (std::size_t c = 0; c < grid.axis2.size(); ++c) {
      std::snprintf(buf, sizeof buf, ",%.12e", grid.values(static_cast<Index>(r), static_cast<Index>(c)));
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace catstab
