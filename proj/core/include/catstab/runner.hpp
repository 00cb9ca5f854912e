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

#ifndef CATSTAB_RUNNER_HPP
#define CATSTAB_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "catstab/scenario.hpp"

namespace catstab {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNumerical = 2,
  kExitVerification = 3,
};

struct RunOptions {
  std::string out_dir = ".";
  /// Overrides evolution.fixed_step.
  std::optional<double> fixed_step;
  int threads = 1;
  /// Dimension guard for the direct steady-state solver.
  Index max_dim = 128;
  /// `wigner` only: evaluate a saved density-matrix dump instead of evolving.
  std::optional<std::string> state_path;
};

/// Subcommands: simulate, wigner, match-lasers, verify, steady.
/// Artifacts are written to `<out_dir>/<scenario>.<artifact>.<ext>` together
/// with a `<scenario>.<command>.manifest.json`.
int run(const std::string& command, const Scenario& scenario, const RunOptions& opts, std::ostream& out,
        std::ostream& err);

/// Parses the config and runs; every library error is mapped to an exit code.
int run_config(const std::string& command, const std::string& config_path, const RunOptions& opts,
               std::ostream& out, std::ostream& err);

/// Cat the scenario is expected to stabilize: amplitude from the model,
/// parity from the initial state (even when undefined).
StateVector target_cat(const Scenario& scenario);

/// Evolution with the standard probes, honoring outputs.wigner snapshots.
Trajectory simulate(const Scenario& scenario);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace catstab

#endif  // CATSTAB_RUNNER_HPP
