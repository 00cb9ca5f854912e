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

#include "catstab/runner.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "catstab/dump.hpp"
#include "catstab/observables.hpp"
#include "catstab/reduction.hpp"
#include "json.hpp"

#ifndef CATSTAB_VERSION
#define CATSTAB_VERSION "unknown"
#endif

namespace catstab {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

class Session {
 public:
  Session(const std::string& command, const Scenario& sc, const RunOptions& opts)
      : command_(command), sc_(sc), opts_(opts), start_(std::chrono::steady_clock::now()) {
    fs::create_directories(opts_.out_dir);
  }

  std::string path(const std::string& artifact, const std::string& ext) const {
    return (fs::path(opts_.out_dir) / (sc_.name + "." + artifact + "." + ext)).string();
  }

  std::ofstream open(const std::string& artifact, const std::string& ext) {
    const std::string p = path(artifact, ext);
    std::ofstream os(p);
    if (!os) throw Error("cannot write '" + p + "'");
    artifacts_.push_back(fs::path(p).filename().string());
    return os;
  }

  json& summary() { return summary_; }

  void write_manifest(int exit_code) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json m;
    m["scenario"] = sc_.name;
    m["command"] = command_;
    m["config_hash"] = fnv1a_hex(canonical_dump(sc_));
    m["versions"] = {{"catstab", CATSTAB_VERSION},
                     {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                                   "." + std::to_string(EIGEN_MINOR_VERSION)},
                     {"compiler", __VERSION__}};
    m["timestamp"] = utc_timestamp();
    m["wall_time_s"] = wall;
    m["threads"] = opts_.threads;
    m["exit_code"] = exit_code;
    m["artifacts"] = artifacts_;
    m["summary"] = summary_;
    std::ofstream os(path(command_ + ".manifest", "json"));
    os << m.dump(2) << '\n';
  }

  const Scenario& scenario() const { return sc_; }
  const RunOptions& options() const { return opts_; }

 private:
  std::string command_;
  const Scenario& sc_;
  const RunOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> artifacts_;
  json summary_ = json::object();
};

void write_trajectory(std::ostream& os, const Trajectory& traj) {
  os << "t,fidelity,parity,pop_e,purity\n";
  const auto& f = traj.series("fidelity");
  const auto& p = traj.series("parity");
  const auto& e = traj.series("pop_e");
  const auto& u = traj.series("purity");
  char buf[160];
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f,%.12f,%.12f,%.12e,%.12f\n", traj.times[i], f[i], p[i], e[i], u[i]);
    os << buf;
  }
}

void emit_wigner(Session& s, const DensityMatrix& rho, double alpha_ref, const std::string& provenance) {
  const WignerRequest req = s.scenario().outputs.wigner.value_or(WignerRequest{});
  WignerGrid grid = wigner_plane_cut(partial_trace_internal(rho), req.window_lo, req.window_hi, req.n_points,
                                     s.options().threads);
  grid.provenance = provenance;
  grid.alpha_reference = alpha_ref;
  const GridMetadata meta{fnv1a_hex(canonical_dump(s.scenario())), utc_timestamp()};
  auto table = s.open("wigner", "csv");
  write_wigner_table(table, grid, meta);
  auto matrix = s.open("wigner_matrix", "csv");
  write_wigner_matrix(matrix, grid, meta);
  const Index mid = (req.n_points - 1) / 2;
  s.summary()["wigner_center"] = grid.values(mid, mid);
  s.summary()["wigner_center_coordinate"] = grid.axis1[static_cast<std::size_t>(mid)];
}

int cmd_simulate(Session& s, std::ostream& out, bool wigner_only) {
  const Scenario& sc = s.scenario();
  const bool want_traj = sc.outputs.trajectory && !wigner_only;
  const bool want_wigner = sc.outputs.wigner.has_value();
  if (wigner_only && !want_wigner) throw ConfigError("outputs.wigner", "the wigner command needs outputs.wigner");

  if (sc.outputs.laser_settings && !wigner_only) {
    const LaserSettings lasers = sc.model.mode_count == 2 ? match_lasers(sc.model) : match_lasers_3(sc.model);
    auto os = s.open("laser_settings", "csv");
    os << "laser,rabi,phase\n";
    for (std::size_t n = 0; n < lasers.rabi.size(); ++n) {
      os << n << ',' << fmt("%.12g", lasers.rabi[n]) << ',' << fmt("%.12g", lasers.phases[n]) << '\n';
    }
  }
  if (sc.outputs.dark_state && !wigner_only) {
    const HilbertSpace vib = sc.model.space().vibrational_space();
    const OperatorMatrix sq = collective_square(vib);
    const double alpha = sc.model.cat_amplitude();
    auto os = s.open("dark_state", "csv");
    os << "sign,alpha,residual\n";
    for (ParitySign sign : {ParitySign::kEven, ParitySign::kOdd}) {
      const StateVector psi = cat_state(vib, alpha, sign);
      const Vector r = sc.model.lambda_rate * (sq.entries() * psi.amplitudes()) - sc.model.epsilon * psi.amplitudes();
      const char* name = sign == ParitySign::kEven ? "even" : "odd";
      os << name << ',' << fmt("%.12g", alpha) << ',' << fmt("%.6e", r.norm()) << '\n';
      s.summary()[std::string("dark_state_residual_") + name] = r.norm();
      out << "dark-state residual (" << name << "): " << fmt("%.3e", r.norm()) << '\n';
    }
  }
  if (!want_traj && !want_wigner) return kExitOk;

  const Trajectory traj = simulate(sc);
  s.summary()["status"] = to_string(traj.status);
  s.summary()["t_end"] = traj.t_end;
  s.summary()["accepted_steps"] = traj.accepted_steps;
  s.summary()["rejected_steps"] = traj.rejected_steps;
  s.summary()["max_trace_drift"] = traj.max_trace_drift;
  s.summary()["final_fidelity"] = traj.series("fidelity").back();
  out << "status " << to_string(traj.status) << " at t = " << fmt("%.4f", traj.t_end) << ", "
      << traj.accepted_steps << " steps, final fidelity " << fmt("%.6f", traj.series("fidelity").back())
      << '\n';

  if (want_traj) {
    auto os = s.open("trajectory", "csv");
    write_trajectory(os, traj);
    auto st = s.open("final_state", "json");
    dump::write(st, traj.final_state());
  }
  if (want_wigner) {
    const double t = sc.outputs.wigner->t_snapshot;
    // An early steady exit leaves the final state as the best snapshot.
    const DensityMatrix& rho = t <= traj.t_end + 1e-9 ? traj.state_at(t) : traj.final_state();
    emit_wigner(s, rho, sc.model.cat_amplitude(),
                "evolved state at t = " + fmt("%.6g", std::min(t, traj.t_end)));
  }
  return kExitOk;
}

int cmd_wigner_from_dump(Session& s, const std::string& state_path) {
  const DensityMatrix rho = dump::load_density_matrix(state_path);
  emit_wigner(s, rho, s.scenario().model.cat_amplitude(), "density-matrix dump " + state_path);
  return kExitOk;
}

int cmd_match_lasers(Session& s, std::ostream& out) {
  const ModelSpec& spec = s.scenario().model;
  const LaserSettings lasers = spec.mode_count == 2 ? match_lasers(spec) : match_lasers_3(spec);
  auto os = s.open("laser_settings", "csv");
  os << "laser,rabi,phase\n";
  for (std::size_t n = 1; n <= lasers.rabi.size(); ++n) {
    const std::size_t k = n % lasers.rabi.size();  // sidebands first, carrier last
    out << "Omega_" << k << " = " << fmt("%.10g", lasers.rabi[k]) << "  phase " << fmt("%.6g", lasers.phases[k])
        << '\n';
    os << k << ',' << fmt("%.12g", lasers.rabi[k]) << ',' << fmt("%.12g", lasers.phases[k]) << '\n';
    s.summary()["Omega_" + std::to_string(k)] = lasers.rabi[k];
  }
  auto rs = s.open("matching_residuals", "csv");
  rs << "condition,value,target,relative\n";
  for (const auto& r : matching_residuals(spec, lasers)) {
    out << "residual " << r.condition << ": " << fmt("%.3e", r.relative) << '\n';
    rs << r.condition << ',' << fmt("%.15g", r.value) << ',' << fmt("%.15g", r.target) << ','
       << fmt("%.3e", r.relative) << '\n';
  }
  return kExitOk;
}

int cmd_verify(Session& s, std::ostream& out) {
  const Scenario& sc = s.scenario();
  const OracleReport report = compare_with_full(sc.model, sc.initial_state, sc.evolution);
  auto os = s.open("oracle_report", "csv");
  write_oracle_report(os, report);
  s.summary()["max_deviation"] = report.max_deviation;
  s.summary()["passed"] = report.passed;
  out << (report.passed ? "PASS" : "FAIL") << " oracle: max fidelity deviation "
      << fmt("%.3e", report.max_deviation) << " over " << report.times.size() << " samples (tolerance "
      << fmt("%.0e", report.tolerance) << ")\n";
  return report.passed ? kExitOk : kExitVerification;
}

int cmd_steady(Session& s, std::ostream& out) {
  const Scenario& sc = s.scenario();
  const int parity = initial_parity(sc.initial_state).value_or(0);
  const ParitySign sign = parity < 0 ? ParitySign::kOdd : ParitySign::kEven;
  const Index guard = s.options().max_dim;

  std::optional<DensityMatrix> rho;
  std::optional<StateVector> target;
  std::string method;
  if (sc.model.space().total_dim() <= guard) {
    rho = steady_state_direct(sc.model, parity, guard);
    target = target_cat(sc);
    method = "full model";
  } else {
    // Fall back to the symmetric-mode model when the full space is too large.
    std::optional<ReducedModel> reduced;
    try {
      reduced = reduce(sc.model);
    } catch (const ConfigError& e) {
      throw ConfigError("max_dim", "total_dim " + std::to_string(sc.model.space().total_dim()) +
                                       " exceeds the guard and the model is not reducible (" + e.what() + ")");
    }
    rho = steady_state_direct(reduced->generator(), parity, guard);
    target = cat_state(reduced->space.vibrational_space(), reduced->reference_alpha, sign);
    method = "symmetric-mode reduction, c_dim " + std::to_string(reduced->c_dim);
  }
  const DensityMatrix vib = partial_trace_internal(*rho);
  const double fid = fidelity_pure(vib, *target);
  s.summary()["method"] = method;
  s.summary()["fidelity"] = fid;
  s.summary()["parity"] = parity_expectation(*rho);
  s.summary()["pop_e"] = excited_population(*rho);
  s.summary()["purity"] = vib.purity();
  out << "steady state (" << method << "): fidelity " << fmt("%.6f", fid) << ", parity "
      << fmt("%.6f", parity_expectation(*rho)) << ", purity " << fmt("%.6f", vib.purity()) << '\n';
  auto os = s.open("steady_state", "json");
  dump::write(os, *rho);
  return kExitOk;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

StateVector target_cat(const Scenario& sc) {
  const ParitySign sign =
      initial_parity(sc.initial_state).value_or(1) < 0 ? ParitySign::kOdd : ParitySign::kEven;
  return cat_state(sc.model.space().vibrational_space(), sc.model.cat_amplitude(), sign);
}

Trajectory simulate(const Scenario& sc) {
  EvolutionConfig cfg = sc.evolution;
  if (sc.outputs.wigner) cfg.snapshot_times.push_back(sc.outputs.wigner->t_snapshot);
  const DensityMatrix rho0 = DensityMatrix::from_pure(prepare(sc.initial_state, sc.model.space()));
  return evolve(rho0, sc.model, cfg, standard_probes(target_cat(sc)));
}

int run(const std::string& command, const Scenario& scenario, const RunOptions& opts, std::ostream& out,
        std::ostream& err) {
  Scenario sc = scenario;
  if (opts.fixed_step) {
    sc.evolution.fixed_step = opts.fixed_step;
    sc.evolution.validate();
  }
  Session session(command, sc, opts);
  int code = kExitOk;
  try {
    if (command == "simulate") {
      code = cmd_simulate(session, out, false);
    } else if (command == "wigner") {
      code = opts.state_path ? cmd_wigner_from_dump(session, *opts.state_path) : cmd_simulate(session, out, true);
    } else if (command == "match-lasers") {
      code = cmd_match_lasers(session, out);
    } else if (command == "verify") {
      code = cmd_verify(session, out);
    } else if (command == "steady") {
      code = cmd_steady(session, out);
    } else {
      throw ConfigError("command", "unknown subcommand '" + command + "'");
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    code = kExitConfig;
  } catch (const TruncationError& e) {
    err << "config error: " << e.what() << '\n';
    code = kExitConfig;
  } catch (const DimensionError& e) {
    err << "config error: " << e.what() << '\n';
    code = kExitConfig;
  } catch (const DegenerateSteadyStateError& e) {
    err << "numerical failure: " << e.what() << " (null space dimension " << e.null_space_dimension() << ")\n";
    code = kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    code = kExitNumerical;
  }
  session.summary()["exit_code"] = code;
  session.write_manifest(code);
  return code;
}

int run_config(const std::string& command, const std::string& config_path, const RunOptions& opts,
               std::ostream& out, std::ostream& err) {
  Scenario sc;
  try {
    sc = parse_scenario(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << config_path << ": " << e.what() << '\n';
    return kExitConfig;
  }
  return run(command, sc, opts, out, err);
}

}  // namespace catstab
