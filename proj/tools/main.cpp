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

// catstab: scenario-driven front end.
//
//   catstab simulate     --config scenarios/fig1a_even_cat.yaml --out out/
//   catstab wigner       --config scenarios/fig2_wigner_even.yaml [--state dump.json]
//   catstab match-lasers --config scenarios/fig1a_even_cat.yaml
//   catstab verify       --config scenarios/oracle_even_cat.yaml
//   catstab steady       --config scenarios/oracle_even_cat.yaml --max-dim 128

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "catstab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dissipative cat-state stabilization in a trapped ion"};
  app.require_subcommand(1, 1);

  std::string config;
  catstab::RunOptions opts;
  double fixed_step = 0.0;
  long max_dim = opts.max_dim;
  std::string state_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Scenario YAML file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--fixed-step", fixed_step, "Fixed RK4 step (overrides the scenario)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opts.threads, "Worker threads for Wigner grids")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    sub->add_option("--max-dim", max_dim, "Dimension guard for the direct steady-state solver")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  const char* commands[][2] = {
      {"simulate", "Evolve the master equation and write requested artifacts"},
      {"wigner", "Joint Wigner plane cut of an evolved or dumped state"},
      {"match-lasers", "Print matched laser settings and matching residuals"},
      {"verify", "Compare the full run with the symmetric-mode reduction"},
      {"steady", "Solve for the steady state directly"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    if (std::string(name) == "wigner") {
      sub->add_option("--state", state_path, "Density-matrix dump to evaluate")->check(CLI::ExistingFile);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : catstab::kExitConfig;
  }

  if (fixed_step > 0.0) opts.fixed_step = fixed_step;
  opts.max_dim = max_dim;
  if (!state_path.empty()) opts.state_path = state_path;
  const std::string command = app.get_subcommands().front()->get_name();
  return catstab::run_config(command, config, opts, std::cout, std::cerr);
}
