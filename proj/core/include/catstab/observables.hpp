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

#ifndef CATSTAB_OBSERVABLES_HPP
#define CATSTAB_OBSERVABLES_HPP

#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "catstab/dynamics.hpp"
#include "catstab/states.hpp"

namespace catstab {

/// Reduced state of the vibrational modes.
DensityMatrix partial_trace_internal(const DensityMatrix& rho);

/// Reduced state after tracing out one vibrational mode of a vibrational-only state.
DensityMatrix trace_out_mode(const DensityMatrix& rho_vib, int mode_index);

/// <psi| rho |psi>. A target on the full space must have no |e> component and
/// is reduced to its vibrational part when rho is vibrational-only.
double fidelity_pure(const DensityMatrix& rho, const StateVector& target);

/// <(-1)^(total phonon number)>.
double parity_expectation(const DensityMatrix& rho);
/// Tr(rho |e><e|).
double excited_population(const DensityMatrix& rho);

/// Standard probes for a trajectory: fidelity to `target`, parity, excited
/// population and purity of the vibrational state.
std::vector<ObservableProbe> standard_probes(const StateVector& target);

/// Upper bound on |W| for two modes.
inline constexpr double kTwoModeWignerBound = 4.0 / (std::numbers::pi * std::numbers::pi);

/// Joint Wigner function
///   W(beta, chi) = (4 / pi^2) Tr[rho D_a(beta) P_a D_a(beta)^dag D_b(chi) P_b D_b(chi)^dag]
/// of a two-mode vibrational state, P the single-mode parity.
double wigner_joint(const DensityMatrix& rho_vib, Complex beta, Complex chi);

/// Three-mode Wigner function at the origin, (2/pi)^3 <parity>.
double wigner_triple_origin(const DensityMatrix& rho_vib);

struct WignerGrid {
  /// Im(beta) samples, ascending (rows of `values`).
  std::vector<double> axis1;
  /// Im(chi) samples, ascending (columns of `values`).
  std::vector<double> axis2;
  RealMatrix values;
  std::string provenance;
  double alpha_reference = 0.0;
};

/// W(i y1, i y2) for y1, y2 on a uniform grid over [lo, hi]. Points are
/// independent; `threads > 1` splits rows across worker threads.
WignerGrid wigner_plane_cut(const DensityMatrix& rho_vib, double lo, double hi, int n_points,
                            int threads = 1);

struct GridMetadata {
  std::string scenario_hash;
  std::string timestamp;
};

/// Long format: a metadata block of '#' lines, then header "y1,y2,W".
void write_wigner_table(std::ostream& os, const WignerGrid& grid, const GridMetadata& meta);
/// Square matrix for heatmaps: first row holds Im(chi), first column Im(beta).
void write_wigner_matrix(std::ostream& os, const WignerGrid& grid, const GridMetadata& meta);

}  // namespace catstab

#endif  // CATSTAB_OBSERVABLES_HPP
