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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "catstab/observables.hpp"
#include "catstab/reduction.hpp"
#include "catstab/runner.hpp"
#include "catstab/scenario.hpp"

namespace {

using namespace catstab;

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [out of bounds]");
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Scenario load(const std::string& name) { return parse_scenario(std::string(CATSTAB_SCENARIO_DIR) + "/" + name + ".yaml"); }

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// Runs a scenario and reports its wall time on stderr.
Trajectory run_logged(const Scenario& sc, const std::string& label) {
  const auto t0 = std::chrono::steady_clock::now();
  Trajectory traj = simulate(sc);
  std::fprintf(stderr, "  [%s] t_end %.3g, %ld steps (%ld rejected), %.1f s\n", label.c_str(), traj.t_end,
               traj.accepted_steps, traj.rejected_steps, elapsed(t0));
  return traj;
}

double value_at(const Trajectory& traj, const std::string& series, double t) {
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (std::abs(traj.times[i] - t) < 1e-9) return traj.series(series)[i];
  }
  throw Error("no sample at t = " + fmt("%g", t));
}

double max_parity_drift(const Trajectory& traj) {
  const auto& p = traj.series("parity");
  double worst = 0.0;
  for (double v : p) worst = std::max(worst, std::abs(v - p.front()));
  return worst;
}

Scenario without_damping(Scenario sc) {
  sc.model.gamma_vib.assign(sc.model.gamma_vib.size(), 0.0);
  sc.model.dephasing_rate = 0.0;
  return sc;
}

Scenario ideal(Scenario sc) {
  sc.model.variant = HamiltonianVariant::kIdeal;
  return sc;
}

Verdict dark_state_equation() {
  Verdict v;
  for (int modes : {2, 3}) {
    ModelSpec s;
    s.mode_count = modes;
    s.epsilon = 16.0;
    s.eta.assign(static_cast<std::size_t>(modes), 0.1);
    s.mode_dims.assign(static_cast<std::size_t>(modes), 30);
    const HilbertSpace vib = s.space().vibrational_space();
    OperatorMatrix sum = annihilation(vib, 0);
    for (int m = 1; m < modes; ++m) sum += annihilation(vib, m);
    const OperatorMatrix lhs = Complex(s.lambda_rate) * (sum * sum);
    for (ParitySign sign : {ParitySign::kEven, ParitySign::kOdd}) {
      const StateVector psi = cat_state(vib, s.cat_amplitude(), sign);
      const double residual = (apply(lhs, psi).amplitudes() - s.epsilon * psi.amplitudes()).norm();
      v.check(residual <= 1e-4, std::to_string(modes) + "-mode " + (sign == ParitySign::kEven ? "+" : "-") +
                                    " residual " + fmt("%.2e", residual) + " (alpha " +
                                    fmt("%.6g", s.cat_amplitude()) + ")");
    }
  }
  return v;
}

Verdict series_validation() {
  Verdict v;
  ModelSpec s = load("fig1a_even_cat").model;
  s.variant = HamiltonianVariant::kSeries;
  const LaserSettings lasers = match_lasers(s);
  const double d0 = (series_hamiltonian(s, lasers, 0) - ideal_hamiltonian(s)).max_abs();
  const double d1 = (series_hamiltonian(s, lasers, 1) - higher_order_hamiltonian(s)).max_abs();
  v.check(d0 <= 1e-12, "j_max=0 vs ideal " + fmt("%.2e", d0));
  v.check(d1 <= 1e-12, "j_max=1 vs higher-order " + fmt("%.2e", d1));
  return v;
}

double reduced_steady_fidelity(const ModelSpec& spec, ParitySign sign) {
  const ReducedModel m = reduce(spec);
  const DensityMatrix rho = steady_state_direct(m.generator(), static_cast<int>(sign));
  return fidelity_pure(partial_trace_internal(rho), cat_state(m.space.vibrational_space(), m.reference_alpha, sign));
}

Verdict dephasing_robustness() {
  Verdict v;
  ModelSpec spec = load("oracle_even_cat").model;
  for (ParitySign sign : {ParitySign::kEven, ParitySign::kOdd}) {
    spec.dephasing_rate = 0.0;
    const double f0 = reduced_steady_fidelity(spec, sign);
    spec.dephasing_rate = 5.0 * spec.lambda_rate;
    const double f5 = reduced_steady_fidelity(spec, sign);
    v.check(std::abs(f5 - f0) <= 1e-3, std::string(sign == ParitySign::kEven ? "even" : "odd") + " |dF| " +
                                           fmt("%.2e", std::abs(f5 - f0)) + " (F " + fmt("%.6f", f0) + ")");
  }
  return v;
}

void report(int id, const std::string& title, const Verdict& v, bool& all) {
  std::printf("%s criterion %d: %s: %s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str());
  std::fflush(stdout);
  all = all && v.pass;
}

}  // namespace

int main() {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  auto guarded = [&](int id, const std::string& title, auto&& body) {
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("error: ") + e.what();
    }
    report(id, title, v, all);
  };

  guarded(5, "dark-state equation", dark_state_equation);
  guarded(9, "series validation", series_validation);
  guarded(8, "dephasing robustness", dephasing_robustness);

  guarded(7, "oracle equivalence", [] {
    Verdict v;
    const Scenario sc = load("oracle_even_cat");
    const auto t0 = std::chrono::steady_clock::now();
    const OracleReport r = compare_with_full(sc.model, sc.initial_state, sc.evolution);
    std::fprintf(stderr, "  [oracle] %zu samples, %.1f s\n", r.times.size(), elapsed(t0));
    v.check(r.passed && r.max_deviation <= 1e-3,
            "max deviation " + fmt("%.2e", r.max_deviation) + " over " + std::to_string(r.times.size()) + " samples");
    const double f = reduced_steady_fidelity(sc.model, ParitySign::kEven);
    v.check(f >= 0.999, "reduced steady fidelity " + fmt("%.6f", f));
    return v;
  });

  const Scenario even = load("fig1a_even_cat");
  const Scenario odd = load("fig1b_odd_cat");
  const Scenario even_w = load("fig2_wigner_even");
  const Scenario odd_w = load("fig3_wigner_odd");

  // The Wigner scenarios share the model and initial state of the fidelity ones,
  // so one run per parity serves criteria 1, 2 and 4.
  Scenario even_run = even;
  even_run.outputs.wigner = even_w.outputs.wigner;
  Scenario odd_run = odd;
  odd_run.outputs.wigner = odd_w.outputs.wigner;

  std::optional<Trajectory> even_traj;
  std::optional<Trajectory> odd_traj;

  guarded(1, "even-cat landmark", [&] {
    Verdict v;
    even_traj = run_logged(even_run, "even, higher order");
    const double f = value_at(*even_traj, "fidelity", 6.5);
    v.check(std::abs(f - 0.977) <= 0.010, "F(6.5) = " + fmt("%.5f", f) + ", target 0.977 +- 0.010");
    return v;
  });

  guarded(2, "odd-cat landmark", [&] {
    Verdict v;
    odd_traj = run_logged(odd_run, "odd, higher order");
    const double f = value_at(*odd_traj, "fidelity", 3.5);
    v.check(std::abs(f - 0.986) <= 0.010, "F(3.5) = " + fmt("%.5f", f) + ", target 0.986 +- 0.010");
    return v;
  });

  guarded(3, "higher-order correction size", [&] {
    Verdict v;
    for (const auto* sc : {&even, &odd}) {
      if (!(sc == &even ? even_traj : odd_traj)) throw Error("higher-order run unavailable");
      const Trajectory& ho = sc == &even ? *even_traj : *odd_traj;
      const Trajectory id = run_logged(ideal(*sc), sc->name + ", ideal");
      const double t = sc->evolution.t_final;
      const double f_ho = value_at(ho, "fidelity", t);
      const double f_id = value_at(id, "fidelity", t);
      v.check(std::abs(f_ho - f_id) <= 0.005, sc->name + " at t=" + fmt("%g", t) + ": ideal " + fmt("%.5f", f_id) +
                                                  ", higher order " + fmt("%.5f", f_ho) + ", |dF| " +
                                                  fmt("%.4f", std::abs(f_ho - f_id)));
    }
    return v;
  });

  guarded(4, "Wigner origin values", [&] {
    Verdict v;
    if (!even_traj || !odd_traj) throw Error("higher-order runs unavailable");
    const DensityMatrix re = partial_trace_internal(even_traj->state_at(even_w.outputs.wigner->t_snapshot));
    const DensityMatrix ro = partial_trace_internal(odd_traj->state_at(odd_w.outputs.wigner->t_snapshot));
    const double we = wigner_joint(re, 0.0, 0.0);
    const double wo = wigner_joint(ro, 0.0, 0.0);
    v.check(std::abs(we - kTwoModeWignerBound) <= 0.05, "even W(0,0) = " + fmt("%.4f", we));
    v.check(std::abs(wo + kTwoModeWignerBound) <= 0.05, "odd W(0,0) = " + fmt("%.4f", wo));
    // Fringes along the diagonal y1 = y2 are complementary between the parities.
    const WignerRequest& req = *even_w.outputs.wigner;
    const WignerGrid ge = wigner_plane_cut(re, req.window_lo, req.window_hi, req.n_points);
    const WignerGrid go = wigner_plane_cut(ro, req.window_lo, req.window_hi, req.n_points);
    int flipped = 0;
    int significant = 0;
    for (int k = 0; k < req.n_points; ++k) {
      const double a = ge.values(k, k);
      const double b = go.values(k, k);
      if (std::abs(a) < 0.05 * kTwoModeWignerBound) continue;
      ++significant;
      if (a * b < 0.0) ++flipped;
    }
    v.check(significant > 0 && flipped == significant,
            "diagonal sign flips " + std::to_string(flipped) + "/" + std::to_string(significant));
    return v;
  });

  guarded(6, "parity conservation", [&] {
    Verdict v;
    for (const auto* sc : {&even, &odd}) {
      const Trajectory traj = run_logged(without_damping(*sc), sc->name + ", no damping");
      const double drift = max_parity_drift(traj);
      v.check(drift <= 1e-6, sc->name + " max |d<Pi>| " + fmt("%.2e", drift));
    }
    return v;
  });

  std::printf("%s: acceptance finished in %.0f s\n", all ? "PASS" : "FAIL", elapsed(start));
  return all ? 0 : 1;
}
