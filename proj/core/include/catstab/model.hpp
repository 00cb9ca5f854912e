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

#ifndef CATSTAB_MODEL_HPP
#define CATSTAB_MODEL_HPP

#include <string>
#include <vector>

#include "catstab/operators.hpp"

namespace catstab {

/// Which effective Hamiltonian to build.
///
///  - kIdeal:       [-lambda (sum of modes)^2 + epsilon] e^{-i phi0} S+ + h.c.
///  - kHigherOrder: the ideal form with the leading Lamb-Dicke corrections
///                  (two modes only).
///  - kSeries:      the nonlinear Jaynes-Cummings expansion truncated at
///                  j + l <= j_max, driven by matched laser settings.
enum class HamiltonianVariant { kIdeal, kHigherOrder, kSeries };

std::string to_string(HamiltonianVariant v, int j_max = 0);

/// Physical parameters of one scenario. Rates are in units of `lambda_rate`.
struct ModelSpec {
  int mode_count = 2;
  std::vector<double> eta;
  double lambda_rate = 1.0;
  double epsilon = 0.0;
  double Gamma = 0.0;
  std::vector<double> gamma_vib;
  double dephasing_rate = 0.0;
  double phi0 = 0.0;
  HamiltonianVariant variant = HamiltonianVariant::kIdeal;
  int j_max = 0;
  std::vector<int> mode_dims;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  HilbertSpace space() const { return HilbertSpace(mode_dims); }
  /// Amplitude of the dark-state cat: sqrt(epsilon / lambda) / mode_count.
  double cat_amplitude() const;
  bool has_vibrational_damping() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// Rabi frequencies and phases indexed by laser number: entry 0 is the
/// carrier, entries 1.. are the sideband beams.
struct LaserSettings {
  std::vector<double> rabi;
  std::vector<double> phases;
};

/// Two-mode matching: equal phases phi0 and
///   eta_x^2 e^{-eta_x^2/2} O1 = eta_y^2 e^{-eta_y^2/2} O2
///     = (eta_x eta_y / 2) e^{-(eta_x^2+eta_y^2)/4} O3 = 2 lambda,
///   O0 = epsilon e^{(eta_x^2+eta_y^2)/4}.
LaserSettings match_lasers(const ModelSpec& spec);

/// Three-mode matching, normalized so the resulting Hamiltonian is
/// -lambda (a+b+c)^2 + epsilon (single-axis products 2 lambda, cross
/// products 4 lambda).
LaserSettings match_lasers_3(const ModelSpec& spec);

struct MatchingResidual {
  std::string condition;
  double value = 0.0;
  double target = 0.0;
  double relative = 0.0;
};

/// Evaluate each matching condition for the given settings.
std::vector<MatchingResidual> matching_residuals(const ModelSpec& spec, const LaserSettings& lasers);

/// Lamb-Dicke Hamiltonian expressed through laser settings (lowest order in
/// each coupling): two or three modes.
OperatorMatrix lamb_dicke_hamiltonian(const ModelSpec& spec, const LaserSettings& lasers);

/// Nonlinear Jaynes-Cummings series for two modes, truncated at j + l <= j_max.
/// The carrier term carries no mode operator at lowest order.
OperatorMatrix series_hamiltonian(const ModelSpec& spec, const LaserSettings& lasers, int j_max);

OperatorMatrix ideal_hamiltonian(const ModelSpec& spec);
OperatorMatrix higher_order_hamiltonian(const ModelSpec& spec);

/// Dispatch on spec.variant.
OperatorMatrix build_hamiltonian(const ModelSpec& spec);

struct JumpOperator {
  std::string label;
  OperatorMatrix op;
  /// Prefactor in (rate / 2)(2 L rho L^dag - L^dag L rho - rho L^dag L).
  double rate = 0.0;
};

/// [(S-, Gamma)] plus nonzero vibrational channels and optional S_z dephasing.
std::vector<JumpOperator> jump_operators(const ModelSpec& spec);

/// (sum of mode annihilators)^2, the operator of the dark-state condition.
OperatorMatrix collective_square(const HilbertSpace& space);

}  // namespace catstab

#endif  // CATSTAB_MODEL_HPP
