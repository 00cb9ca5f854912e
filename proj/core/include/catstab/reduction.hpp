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

#ifndef CATSTAB_REDUCTION_HPP
#define CATSTAB_REDUCTION_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "catstab/dynamics.hpp"
#include "catstab/initial_state.hpp"

namespace catstab {

/// Single-mode model in the symmetric mode c = (a + b) / sqrt(2).
///
/// Since (a + b)^2 = 2 c^2, the ideal two-mode drive becomes
/// [-2 lambda c^2 + epsilon] S+ + h.c. and the antisymmetric mode decouples.
struct ReducedModel {
  HilbertSpace space;
  int c_dim = 0;
  OperatorMatrix hamiltonian;
  std::vector<JumpOperator> jumps;
  /// sqrt(epsilon / (2 lambda)): the c-mode cat amplitude.
  double reference_alpha = 0.0;
  /// reference_alpha / sqrt(2): the per-mode amplitude in the original frame.
  double mapped_alpha = 0.0;

  LindbladGenerator generator() const { return {hamiltonian, jumps}; }
};

/// Requires a two-mode ideal spec without vibrational damping. `c_dim`
/// defaults to twice the larger per-mode truncation.
ReducedModel reduce(const ModelSpec& spec, std::optional<int> c_dim = std::nullopt);

/// Image of a two-mode initial state in the c mode (d left in vacuum).
/// Supports vacuum, the symmetric one-phonon state and two-mode cats.
StateVector reduce_initial_state(const InitialState& init, const ReducedModel& model);

struct OracleReport {
  std::vector<double> times;
  std::vector<double> f_reduced;
  std::vector<double> f_full;
  double max_deviation = 0.0;
  double tolerance = 1e-3;
  bool passed = false;
};

/// Runs the reduced and the full two-mode evolutions and compares the
/// fidelity to the target cat (parity taken from the initial state) at
/// matching sample times.
OracleReport compare_with_full(const ModelSpec& spec, const InitialState& init,
                               const EvolutionConfig& cfg, std::optional<int> c_dim = std::nullopt);

/// Header "t,f_reduced,f_full,deviation", one row per sample, then a
/// final "PASS ..." or "FAIL ..." line.
void write_oracle_report(std::ostream& os, const OracleReport& report);

}  // namespace catstab

#endif  // CATSTAB_REDUCTION_HPP
