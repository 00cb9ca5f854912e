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

#ifndef CATSTAB_SCENARIO_HPP
#define CATSTAB_SCENARIO_HPP

#include <optional>
#include <string>

#include "catstab/dynamics.hpp"
#include "catstab/initial_state.hpp"

namespace catstab {

struct WignerRequest {
  double t_snapshot = 0.0;
  double window_lo = -3.0;
  double window_hi = 3.0;
  int n_points = 61;

  friend bool operator==(const WignerRequest&, const WignerRequest&) = default;
};

struct ScenarioOutputs {
  bool trajectory = true;
  bool laser_settings = false;
  bool oracle_report = false;
  bool dark_state = false;
  std::optional<WignerRequest> wigner;

  friend bool operator==(const ScenarioOutputs&, const ScenarioOutputs&) = default;
};

/// One YAML scenario file. See scenarios/README.md for the schema.
struct Scenario {
  std::string name;
  ModelSpec model;
  InitialState initial_state;
  EvolutionConfig evolution;
  ScenarioOutputs outputs;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Strict parse: unknown keys, wrong types and invariant violations raise
/// ConfigError carrying the 1-based line of the offending node.
Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text);

/// Canonical YAML with every field spelled out at full precision.
std::string canonical_dump(const Scenario& scenario);

/// Parses "ideal", "higher_order" or "series(j)".
HamiltonianVariant parse_variant(const std::string& text, int& j_max);

}  // namespace catstab

#endif  // CATSTAB_SCENARIO_HPP
