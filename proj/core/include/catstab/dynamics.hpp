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

#ifndef CATSTAB_DYNAMICS_HPP
#define CATSTAB_DYNAMICS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catstab/model.hpp"
#include "catstab/states.hpp"

namespace catstab {

/// Right-hand side of the Lindblad master equation
///
///   d rho / dt = -i [H, rho] + sum_k (r_k / 2)(2 L_k rho L_k^dag - L_k^dag L_k rho - rho L_k^dag L_k)
///
/// with the Hamiltonian and jump operators fixed at construction. `apply`
/// assumes its argument is Hermitian, which every density matrix and every
/// Runge-Kutta stage built from one is.
class LindbladGenerator {
 public:
  LindbladGenerator(const OperatorMatrix& hamiltonian, const std::vector<JumpOperator>& jumps);

  const HilbertSpace& space() const noexcept { return space_; }
  Index dim() const noexcept { return space_.total_dim(); }

  void apply(const Matrix& rho, Matrix& drho) const;
  Matrix operator()(const Matrix& rho) const;

  /// Dense Liouvillian on the column-stacked pairs (i, j) admitted by `keep`.
  /// Row/column k of the result corresponds to pairs[k]. Throws NumericalError
  /// if the generator leaks out of the admitted pairs.
  Matrix superoperator(const std::vector<std::pair<Index, Index>>& pairs) const;

  /// True when H and every jump operator map each phonon-parity sector into a
  /// single sector (preserving or flipping it).
  bool respects_parity_blocks() const;
  /// True when H and every jump operator preserve phonon parity.
  bool preserves_parity() const;

 private:
  HilbertSpace space_;
  SparseMatrix hamiltonian_;
  // H_eff^dag with H_eff = H - (i/2) sum_k r_k L_k^dag L_k.
  SparseMatrix effective_adjoint_;
  // sqrt(r_k) L_k and its adjoint.
  std::vector<SparseMatrix> scaled_jumps_;
  std::vector<SparseMatrix> scaled_jumps_adjoint_;
};

Matrix lindblad_rhs(const DensityMatrix& rho, const OperatorMatrix& hamiltonian,
                    const std::vector<JumpOperator>& jumps);

struct EvolutionConfig {
  double t_final = 7.0;
  /// Step ceiling for the adaptive integrator.
  double dt_max = 0.05;
  double rel_tol = 1e-7;
  double abs_tol = 1e-9;
  double sample_interval = 0.1;
  /// Early-exit threshold on the trace norm of d rho / dt.
  double steady_tol = 1e-6;
  /// Classic fourth-order Runge-Kutta with this step when set.
  std::optional<double> fixed_step;
  /// States to keep besides the final one.
  std::vector<double> snapshot_times;
  bool stop_when_steady = true;
  /// Smallest eigenvalue tolerated before the run is aborted.
  double positivity_tol = 1e-6;

  void validate() const;

  friend bool operator==(const EvolutionConfig&, const EvolutionConfig&) = default;
};

enum class EvolutionStatus { kCompleted, kSteady };

std::string to_string(EvolutionStatus status);

struct ObservableProbe {
  std::string name;
  std::function<double(const DensityMatrix&)> evaluate;
};

struct Trajectory {
  std::vector<double> times;
  std::map<std::string, std::vector<double>> observables;
  std::vector<double> state_times;
  std::vector<DensityMatrix> states;
  EvolutionStatus status = EvolutionStatus::kCompleted;
  double t_end = 0.0;
  long accepted_steps = 0;
  long rejected_steps = 0;
  long rhs_evaluations = 0;
  double max_trace_drift = 0.0;

  const std::vector<double>& series(const std::string& name) const;
  const DensityMatrix& final_state() const { return states.back(); }
  /// Stored state closest to t (within 1e-9), or throws.
  const DensityMatrix& state_at(double t) const;
};

/// Name of the automatically recorded Frobenius norm of d rho / dt.
inline constexpr const char* kRhsNormSeries = "rhs_norm";

Trajectory evolve(const DensityMatrix& rho0, const LindbladGenerator& generator,
                  const EvolutionConfig& cfg, const std::vector<ObservableProbe>& probes = {});

Trajectory evolve(const DensityMatrix& rho0, const ModelSpec& spec, const EvolutionConfig& cfg,
                  const std::vector<ObservableProbe>& probes = {});

/// Trace norm of a Hermitian matrix (sum of |eigenvalues|).
double trace_norm_hermitian(const Matrix& m);

/// Steady state from the null space of the Liouvillian.
///
/// With `parity_sign` set to +1 or -1 and a parity-preserving generator, the
/// problem is restricted to that phonon-parity sector; otherwise to the
/// parity-block-diagonal pairs. `max_dim` guards total_dim because the dense
/// superoperator grows as total_dim^2 x total_dim^2.
DensityMatrix steady_state_direct(const LindbladGenerator& generator, int parity_sign,
                                  Index max_dim = 128);
DensityMatrix steady_state_direct(const ModelSpec& spec, int parity_sign, Index max_dim = 128);

}  // namespace catstab

#endif  // CATSTAB_DYNAMICS_HPP
