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

#include "catstab/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "catstab/observables.hpp"

namespace catstab {

ReducedModel reduce(const ModelSpec& spec, std::optional<int> c_dim) {
  spec.validate();
  if (spec.mode_count != 2) throw ConfigError("mode_count", "the reduction needs a two-mode model");
  if (spec.variant != HamiltonianVariant::kIdeal) {
    throw ConfigError("variant", "the reduction is exact only for the ideal Hamiltonian");
  }
  if (spec.has_vibrational_damping()) {
    throw ConfigError("gamma_vib", "the reduction requires zero vibrational damping");
  }
  const int dim = c_dim.value_or(2 * std::max(spec.mode_dims[0], spec.mode_dims[1]));
  if (dim < 2) throw ConfigError("c_dim", "must be at least 2");

  const HilbertSpace space({dim});
  const OperatorMatrix c = annihilation(space, 0);
  OperatorMatrix x = Complex(-2.0 * spec.lambda_rate) * (c * c);
  x += Complex(spec.epsilon) * OperatorMatrix::identity(space);
  x *= std::exp(-kI * spec.phi0);
  const OperatorMatrix forward = x * internal_op(space, InternalOp::kRaise);
  ReducedModel out{space, dim, forward + forward.adjoint(), {}, 0.0, 0.0};

  out.jumps.push_back({"S-", internal_op(space, InternalOp::kLower), spec.Gamma});
  if (spec.dephasing_rate > 0.0) {
    out.jumps.push_back({"S_z", internal_op(space, InternalOp::kInversion), spec.dephasing_rate});
  }
  out.reference_alpha = std::sqrt(spec.epsilon / (2.0 * spec.lambda_rate));
  out.mapped_alpha = out.reference_alpha / std::sqrt(2.0);
  return out;
}

StateVector reduce_initial_state(const InitialState& init, const ReducedModel& model) {
  switch (init.kind) {
    case InitialState::Kind::kVacuum: {
      const int zero = 0;
      return fock_state(model.space, std::span<const int>(&zero, 1), init.internal);
    }
    case InitialState::Kind::kSymmetricOnePhonon:
      return symmetric_one_phonon(model.space, init.internal);
    case InitialState::Kind::kCat: {
      InitialState mapped = init;
      // |alpha>_a |alpha>_b = |sqrt(2) alpha>_c |0>_d.
      mapped.alpha = std::sqrt(2.0) * init.alpha;
      return prepare(mapped, model.space);
    }
    case InitialState::Kind::kFock:
    case InitialState::Kind::kCoherent:
      break;
  }
  throw ConfigError("initial_state.kind",
                    "the reduction supports vacuum, symmetric_one_phonon and cat initial states only");
}

OracleReport compare_with_full(const ModelSpec& spec, const InitialState& init,
                               const EvolutionConfig& cfg, std::optional<int> c_dim) {
  const ReducedModel reduced = reduce(spec, c_dim);
  const ParitySign sign =
      initial_parity(init).value_or(1) < 0 ? ParitySign::kOdd : ParitySign::kEven;

  const HilbertSpace full_space = spec.space();
  const StateVector full_target = cat_state(full_space.vibrational_space(), spec.cat_amplitude(), sign);
  const StateVector reduced_target =
      cat_state(reduced.space.vibrational_space(), reduced.reference_alpha, sign);

  const Trajectory full =
      evolve(DensityMatrix::from_pure(prepare(init, full_space)), spec, cfg, standard_probes(full_target));
  const Trajectory red = evolve(DensityMatrix::from_pure(reduce_initial_state(init, reduced)),
                                reduced.generator(), cfg, standard_probes(reduced_target));

  OracleReport report;
  const auto& ff = full.series("fidelity");
  const auto& fr = red.series("fidelity");
  std::size_t j = 0;
  for (std::size_t i = 0; i < full.times.size(); ++i) {
    while (j < red.times.size() && red.times[j] < full.times[i] - 1e-9) ++j;
    if (j == red.times.size()) break;
    if (std::abs(red.times[j] - full.times[i]) > 1e-9) continue;
    report.times.push_back(full.times[i]);
    report.f_full.push_back(ff[i]);
    report.f_reduced.push_back(fr[j]);
    report.max_deviation = std::max(report.max_deviation, std::abs(ff[i] - fr[j]));
  }
  report.passed = !report.times.empty() && report.max_deviation <= report.tolerance;
  return report;
}

void write_oracle_report(std::ostream& os, const OracleReport& report) {
  os << "t,f_reduced,f_full,deviation\n";
  char buf[160];
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f,%.12f,%.12f,%.3e\n", report.times[i], report.f_reduced[i],
                  report.f_full[i], std::abs(report.f_reduced[i] - report.f_full[i]));
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "%s max_deviation=%.3e tolerance=%.1e samples=%zu\n",
                report.passed ? "PASS" : "FAIL", report.max_deviation, report.tolerance,
                report.times.size());
  os << buf;
}

}  // namespace catstab
