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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catstab/dynamics.hpp"

namespace catstab {

void EvolutionConfig::validate() const {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(field, "must be positive");
  };
  positive(t_final, "t_final");
  positive(dt_max, "dt_max");
  positive(rel_tol, "rel_tol");
  positive(abs_tol, "abs_tol");
  positive(sample_interval, "sample_interval");
  positive(steady_tol, "steady_tol");
  if (rel_tol < 1e-12) throw ConfigError("rel_tol", "must be at least 1e-12");
  if (fixed_step) positive(*fixed_step, "fixed_step");
  for (double t : snapshot_times) {
    if (t < 0.0 || t > t_final) throw ConfigError("snapshot_times", "must lie in [0, t_final]");
  }
}

std::string to_string(EvolutionStatus status) {
  return status == EvolutionStatus::kSteady ? "steady" : "completed";
}

const std::vector<double>& Trajectory::series(const std::string& name) const {
  auto it = observables.find(name);
  if (it == observables.end()) throw Error("trajectory has no observable '" + name + "'");
  return it->second;
}

const DensityMatrix& Trajectory::state_at(double t) const {
  for (std::size_t k = 0; k < state_times.size(); ++k) {
    if (std::abs(state_times[k] - t) <= 1e-9) return states[k];
  }
  std::ostringstream os;
  os << "no stored state at t = " << t;
  throw Error(os.str());
}

double trace_norm_hermitian(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat, the embedded error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class Integrator {
 public:
  Integrator(const LindbladGenerator& gen, const EvolutionConfig& cfg) : gen_(gen), cfg_(cfg) {}

  long rhs_evaluations() const { return rhs_calls_; }
  long accepted() const { return accepted_; }
  long rejected() const { return rejected_; }

  void rhs(const Matrix& y, Matrix& out) {
    ++rhs_calls_;
    gen_.apply(y, out);
  }

  // Advance y from t to t_target. `k1` holds f(y) on entry and on exit.
  void advance(double& t, double t_target, Matrix& y, Matrix& k1) {
    if (cfg_.fixed_step) {
      advance_fixed(t, t_target, y, k1);
    } else {
      advance_adaptive(t, t_target, y, k1);
    }
  }

 private:
  void advance_fixed(double& t, double t_target, Matrix& y, Matrix& k1) {
    const double h_nominal = *cfg_.fixed_step;
    while (t < t_target - 1e-12 * std::max(1.0, t_target)) {
      const double h = std::min(h_nominal, t_target - t);
      tmp_ = y + (0.5 * h) * k1;
      rhs(tmp_, k2_);
      tmp_ = y + (0.5 * h) * k2_;
      rhs(tmp_, k3_);
      tmp_ = y + h * k3_;
      rhs(tmp_, k4_);
      y += (h / 6.0) * (k1 + 2.0 * k2_ + 2.0 * k3_ + k4_);
      t = (t_target - t - h) <= 1e-12 * std::max(1.0, t_target) ? t_target : t + h;
      ++accepted_;
      renormalize(y);
      rhs(y, k1);
    }
  }

  void advance_adaptive(double& t, double t_target, Matrix& y, Matrix& k1) {
    const double h_min = 1e-12 * std::max(1.0, cfg_.t_final);
    while (t < t_target - 1e-12 * std::max(1.0, t_target)) {
      double h = std::min({h_, cfg_.dt_max, t_target - t});
      const bool clipped = h < h_;
      if (h < h_min) {
        std::ostringstream os;
        os << "step size underflow at t = " << t << " (h = " << h << ")";
        throw NumericalError(os.str());
      }
      tmp_ = y + (h * a21) * k1;
      rhs(tmp_, k2_);
      tmp_ = y + h * (a31 * k1 + a32 * k2_);
      rhs(tmp_, k3_);
      tmp_ = y + h * (a41 * k1 + a42 * k2_ + a43 * k3_);
      rhs(tmp_, k4_);
      tmp_ = y + h * (a51 * k1 + a52 * k2_ + a53 * k3_ + a54 * k4_);
      rhs(tmp_, k5_);
      tmp_ = y + h * (a61 * k1 + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
      rhs(tmp_, k6_);
      y_new_ = y + h * (b1 * k1 + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
      rhs(y_new_, k7_);
      err_ = h * (e1 * k1 + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);

      const double err = error_norm(y, y_new_, err_);
      if (!std::isfinite(err)) {
        throw NumericalError("non-finite error estimate at t = " + std::to_string(t));
      }
      if (err <= 1.0) {
        t = (t_target - t - h) <= 1e-12 * std::max(1.0, t_target) ? t_target : t + h;
        y.swap(y_new_);
        k1.swap(k7_);
        const double scale = renormalize(y);
        if (scale != 1.0) k1 *= scale;
        ++accepted_;
        const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        // A step shortened to land on a sample time says nothing about the
        // stable step length; keep the previous estimate in that case.
        if (!clipped || grow < 1.0) h_ = std::min(h * grow, cfg_.dt_max);
      } else {
        ++rejected_;
        h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
      }
      if (h_ < h_min) {
        std::ostringstream os;
        os << "step size underflow at t = " << t << " (h = " << h_ << ")";
        throw NumericalError(os.str());
      }
    }
  }

  double error_norm(const Matrix& y0, const Matrix& y1, const Matrix& err) const {
    double acc = 0.0;
    const Index n = y0.size();
    const Complex* p0 = y0.data();
    const Complex* p1 = y1.data();
    const Complex* pe = err.data();
    for (Index k = 0; k < n; ++k) {
      const double sc = cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(p0[k]), std::abs(p1[k]));
      acc += std::norm(pe[k]) / (sc * sc);
    }
    return std::sqrt(acc / static_cast<double>(n));
  }

  // Rescale to unit trace; returns the factor applied.
  double renormalize(Matrix& y) {
    const double tr = y.trace().real();
    if (!(tr > 0.0)) throw NumericalError("trace collapsed during integration");
    drift_ = std::max(drift_, std::abs(tr - 1.0));
    const double s = 1.0 / tr;
    y *= s;
    return s;
  }

 public:
  double drift() const { return drift_; }

 private:
  const LindbladGenerator& gen_;
  const EvolutionConfig& cfg_;
  double h_ = 1e-3;
  double drift_ = 0.0;
  long rhs_calls_ = 0;
  long accepted_ = 0;
  long rejected_ = 0;
  Matrix tmp_, k2_, k3_, k4_, k5_, k6_, k7_, y_new_, err_;
};

void check_positivity(const Matrix& y, double tol, double t, bool full) {
  double lmin;
  if (full) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (y + y.adjoint()), Eigen::EigenvaluesOnly);
    lmin = es.eigenvalues().minCoeff();
  } else {
    lmin = y.diagonal().real().minCoeff();
  }
  if (lmin < -tol) {
    std::ostringstream os;
    os << "positivity violated at t = " << t << " (smallest " << (full ? "eigenvalue" : "diagonal entry")
       << " " << lmin << "); reduce the step size or tolerances";
    throw NumericalError(os.str());
  }
}

// Full eigen-decompositions at every sample are affordable only on small spaces.
constexpr Index kFullPositivityCheckDim = 256;

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const LindbladGenerator& generator,
                  const EvolutionConfig& cfg, const std::vector<ObservableProbe>& probes) {
  cfg.validate();
  require_same_space(rho0.space(), generator.space(), "evolve");
  const HilbertSpace& space = rho0.space();

  Trajectory traj;
  for (const auto& p : probes) traj.observables[p.name];
  traj.observables[kRhsNormSeries];

  std::vector<double> snapshots = cfg.snapshot_times;
  std::sort(snapshots.begin(), snapshots.end());

  Integrator integ(generator, cfg);
  Matrix y = rho0.entries();
  y = 0.5 * (y + y.adjoint()).eval();
  Matrix k1;
  integ.rhs(y, k1);

  const bool full_check = space.total_dim() <= kFullPositivityCheckDim;
  double t = 0.0;
  long sample_index = 0;
  std::size_t next_snapshot = 0;

  auto record = [&](double time) {
    const DensityMatrix rho(space, y);
    traj.times.push_back(time);
    for (const auto& p : probes) traj.observables[p.name].push_back(p.evaluate(rho));
    traj.observables[kRhsNormSeries].push_back(k1.norm());
  };

  record(0.0);
  while (next_snapshot < snapshots.size() && snapshots[next_snapshot] <= 1e-12) {
    traj.state_times.push_back(0.0);
    traj.states.emplace_back(space, y);
    ++next_snapshot;
  }

  const double eps_t = 1e-12 * std::max(1.0, cfg.t_final);
  while (t < cfg.t_final - eps_t) {
    const double next_sample =
        std::min(cfg.t_final, static_cast<double>(sample_index + 1) * cfg.sample_interval);
    double target = next_sample;
    if (next_snapshot < snapshots.size()) target = std::min(target, snapshots[next_snapshot]);

    integ.advance(t, target, y, k1);

    if (std::abs(t - next_sample) <= eps_t) {
      ++sample_index;
      // Scrub round-off anti-Hermitian drift before handing the state out.
      y = 0.5 * (y + y.adjoint()).eval();
      integ.rhs(y, k1);
      check_positivity(y, cfg.positivity_tol, t, full_check);
      record(t);
    }
    while (next_snapshot < snapshots.size() && std::abs(snapshots[next_snapshot] - t) <= eps_t) {
      traj.state_times.push_back(t);
      traj.states.emplace_back(space, y);
      ++next_snapshot;
    }
    if (cfg.stop_when_steady && std::abs(t - next_sample) <= eps_t) {
      const double frob = k1.norm();
      // Frobenius norm bounds the trace norm from below; only confirm when it is small.
      if (frob < cfg.steady_tol && trace_norm_hermitian(k1) < cfg.steady_tol) {
        traj.status = EvolutionStatus::kSteady;
        break;
      }
    }
  }

  check_positivity(y, cfg.positivity_tol, t, true);
  traj.t_end = t;
  if (traj.state_times.empty() || std::abs(traj.state_times.back() - t) > eps_t) {
    traj.state_times.push_back(t);
    traj.states.emplace_back(space, y);
  }
  traj.accepted_steps = integ.accepted();
  traj.rejected_steps = integ.rejected();
  traj.rhs_evaluations = integ.rhs_evaluations();
  traj.max_trace_drift = integ.drift();
  return traj;
}

Trajectory evolve(const DensityMatrix& rho0, const ModelSpec& spec, const EvolutionConfig& cfg,
                  const std::vector<ObservableProbe>& probes) {
  const LindbladGenerator gen(build_hamiltonian(spec), jump_operators(spec));
  return evolve(rho0, gen, cfg, probes);
}

}  // namespace catstab
