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

#include "catstab/model.hpp"

#include <cmath>

namespace catstab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (i x)^k without going through complex pow.
Complex i_power(double x, int k) {
  static const Complex cycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return std::pow(x, k) * cycle[((k % 4) + 4) % 4];
}

// (a^dag)^j a^k on one mode, lifted to the full space.
OperatorMatrix ladder(const HilbertSpace& space, int mode, int j, int k) {
  const int dim = space.mode_dim(mode);
  SparseMatrix single = fock::identity(dim);
  const SparseMatrix up = fock::creation(dim);
  const SparseMatrix down = fock::annihilation(dim);
  for (int r = 0; r < j; ++r) single = (single * up).pruned();
  for (int r = 0; r < k; ++r) single = (single * down).pruned();
  return embed_mode_operator(space, mode, single);
}

// X S+ + h.c. for a vibrational operator X.
OperatorMatrix drive_with_hc(const OperatorMatrix& vib_part) {
  const OperatorMatrix raise = internal_op(vib_part.space(), InternalOp::kRaise);
  const OperatorMatrix forward = vib_part * raise;
  return forward + forward.adjoint();
}

void require(bool ok, const char* field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

double rabi_at(const LaserSettings& lasers, std::size_t n) {
  if (n >= lasers.rabi.size()) throw ConfigError("rabi", "missing Rabi frequency " + std::to_string(n));
  return lasers.rabi[n];
}

Complex phase_at(const LaserSettings& lasers, std::size_t n) {
  const double phi = n < lasers.phases.size() ? lasers.phases[n] : 0.0;
  return std::exp(-kI * phi);
}

}  // namespace

std::string to_string(HamiltonianVariant v, int j_max) {
  switch (v) {
    case HamiltonianVariant::kIdeal:
      return "ideal";
    case HamiltonianVariant::kHigherOrder:
      return "higher_order";
    case HamiltonianVariant::kSeries:
      return "series(" + std::to_string(j_max) + ")";
  }
  return "unknown";
}

void ModelSpec::validate() const {
  require(mode_count == 2 || mode_count == 3, "mode_count", "must be 2 or 3");
  const auto m = static_cast<std::size_t>(mode_count);
  require(eta.size() == m, "eta", "needs one Lamb-Dicke parameter per mode");
  for (double e : eta) require(e > 0.0 && e < 1.0, "eta", "each value must lie in (0, 1)");
  require(lambda_rate > 0.0 && std::isfinite(lambda_rate), "lambda_rate", "must be positive");
  require(epsilon >= 0.0 && std::isfinite(epsilon), "epsilon", "must be non-negative");
  require(Gamma >= 0.0 && std::isfinite(Gamma), "Gamma", "must be non-negative");
  require(gamma_vib.empty() || gamma_vib.size() == m, "gamma_vib", "needs one rate per mode");
  for (double g : gamma_vib) require(g >= 0.0 && std::isfinite(g), "gamma_vib", "rates must be non-negative");
  require(dephasing_rate >= 0.0 && std::isfinite(dephasing_rate), "dephasing_rate",
          "must be non-negative");
  require(std::isfinite(phi0), "phi0", "must be finite");
  require(mode_dims.size() == m, "mode_dims", "needs one truncation per mode");
  for (int d : mode_dims) require(d >= 2, "mode_dims", "each truncation must be at least 2");
  if (variant == HamiltonianVariant::kSeries) {
    require(mode_count == 2, "variant", "the series Hamiltonian is defined for two modes only");
    require(j_max >= 0, "variant", "series order j_max must be non-negative");
  }
  if (variant == HamiltonianVariant::kHigherOrder) {
    require(mode_count == 2, "variant", "the higher-order Hamiltonian is defined for two modes only");
  }
}

double ModelSpec::cat_amplitude() const { return std::sqrt(epsilon / lambda_rate) / mode_count; }

bool ModelSpec::has_vibrational_damping() const {
  for (double g : gamma_vib) {
    if (g > 0.0) return true;
  }
  return false;
}

LaserSettings match_lasers(const ModelSpec& spec) {
  if (spec.mode_count != 2) throw ConfigError("mode_count", "match_lasers needs a two-mode spec");
  if (spec.eta.size() != 2) throw ConfigError("eta", "needs two Lamb-Dicke parameters");
  const double ex = spec.eta[0];
  const double ey = spec.eta[1];
  if (ex == 0.0 || ey == 0.0) throw ConfigError("eta", "Lamb-Dicke parameters must be nonzero");
  const double lam = spec.lambda_rate;
  const double cross = std::exp((ex * ex + ey * ey) / 4.0);
  LaserSettings out;
  out.rabi = {
      spec.epsilon * cross,
      2.0 * lam * std::exp(ex * ex / 2.0) / (ex * ex),
      2.0 * lam * std::exp(ey * ey / 2.0) / (ey * ey),
      4.0 * lam * cross / (ex * ey),
  };
  out.phases.assign(out.rabi.size(), spec.phi0);
  return out;
}

LaserSettings match_lasers_3(const ModelSpec& spec) {
  if (spec.mode_count != 3) throw ConfigError("mode_count", "match_lasers_3 needs a three-mode spec");
  if (spec.eta.size() != 3) throw ConfigError("eta", "needs three Lamb-Dicke parameters");
  for (double e : spec.eta) {
    if (e == 0.0) throw ConfigError("eta", "Lamb-Dicke parameters must be nonzero");
  }
  const double lam = spec.lambda_rate;
  const double ex = spec.eta[0];
  const double ey = spec.eta[1];
  const double ez = spec.eta[2];
  auto single = [&](double e) { return 2.0 * lam * std::exp(e * e / 2.0) / (e * e); };
  auto pair = [&](double e1, double e2) {
    return 4.0 * lam * std::exp((e1 * e1 + e2 * e2) / 4.0) / (e1 * e2);
  };
  LaserSettings out;
  out.rabi = {
      spec.epsilon * std::exp((ex * ex + ey * ey) / 4.0),
      single(ex), single(ey), single(ez),
      pair(ex, ey), pair(ey, ez), pair(ex, ez),
  };
  out.phases.assign(out.rabi.size(), spec.phi0);
  return out;
}

std::vector<MatchingResidual> matching_residuals(const ModelSpec& spec, const LaserSettings& lasers) {
  const double lam = spec.lambda_rate;
  std::vector<MatchingResidual> out;
  auto add = [&](std::string name, double value, double target) {
    const double rel = target != 0.0 ? std::abs(value - target) / std::abs(target) : std::abs(value);
    out.push_back({std::move(name), value, target, rel});
  };
  auto single = [](double e, double rabi) { return e * e * std::exp(-e * e / 2.0) * rabi; };
  auto pair = [](double e1, double e2, double rabi) {
    return e1 * e2 * std::exp(-(e1 * e1 + e2 * e2) / 4.0) * rabi;
  };
  const auto& e = spec.eta;
  if (spec.mode_count == 2) {
    add("eta_x^2 exp(-eta_x^2/2) Omega_1 = 2 lambda", single(e[0], rabi_at(lasers, 1)), 2.0 * lam);
    add("eta_y^2 exp(-eta_y^2/2) Omega_2 = 2 lambda", single(e[1], rabi_at(lasers, 2)), 2.0 * lam);
    add("(eta_x eta_y/2) exp(-(eta_x^2+eta_y^2)/4) Omega_3 = 2 lambda",
        0.5 * pair(e[0], e[1], rabi_at(lasers, 3)), 2.0 * lam);
  } else {
    const char* names[3] = {"x", "y", "z"};
    for (std::size_t k = 0; k < 3; ++k) {
      add(std::string("eta_") + names[k] + "^2 exp(-eta^2/2) Omega_" + std::to_string(k + 1) +
              " = 2 lambda",
          single(e[k], rabi_at(lasers, k + 1)), 2.0 * lam);
    }
    add("eta_x eta_y exp(..) Omega_4 = 4 lambda", pair(e[0], e[1], rabi_at(lasers, 4)), 4.0 * lam);
    add("eta_y eta_z exp(..) Omega_5 = 4 lambda", pair(e[1], e[2], rabi_at(lasers, 5)), 4.0 * lam);
    add("eta_x eta_z exp(..) Omega_6 = 4 lambda", pair(e[0], e[2], rabi_at(lasers, 6)), 4.0 * lam);
  }
  add("exp(-(eta_x^2+eta_y^2)/4) Omega_0 = epsilon",
      std::exp(-(e[0] * e[0] + e[1] * e[1]) / 4.0) * rabi_at(lasers, 0), spec.epsilon);
  return out;
}

OperatorMatrix collective_square(const HilbertSpace& space) {
  OperatorMatrix sum = OperatorMatrix::zero(space);
  for (int m = 0; m < space.mode_count(); ++m) sum += annihilation(space, m);
  return sum * sum;
}

OperatorMatrix lamb_dicke_hamiltonian(const ModelSpec& spec, const LaserSettings& lasers) {
  spec.validate();
  const HilbertSpace space = spec.space();
  const auto& e = spec.eta;
  const OperatorMatrix id = OperatorMatrix::identity(space);
  auto sq = [&](int mode) { return ladder(space, mode, 0, 2); };
  auto ab = [&](int m1, int m2) { return ladder(space, m1, 0, 1) * ladder(space, m2, 0, 1); };
  auto single = [&](std::size_t mode, std::size_t laser) {
    return -(e[mode] * e[mode] / 2.0) * std::exp(-e[mode] * e[mode] / 2.0) * rabi_at(lasers, laser) *
           phase_at(lasers, laser);
  };
  auto pair = [&](std::size_t m1, std::size_t m2, std::size_t laser) {
    return -(e[m1] * e[m2] / 2.0) * std::exp(-(e[m1] * e[m1] + e[m2] * e[m2]) / 4.0) *
           rabi_at(lasers, laser) * phase_at(lasers, laser);
  };
  const Complex carrier =
      std::exp(-(e[0] * e[0] + e[1] * e[1]) / 4.0) * rabi_at(lasers, 0) * phase_at(lasers, 0);

  OperatorMatrix x = carrier * id;
  x += single(0, 1) * sq(0);
  x += single(1, 2) * sq(1);
  if (spec.mode_count == 2) {
    x += pair(0, 1, 3) * ab(0, 1);
  } else {
    x += single(2, 3) * sq(2);
    x += pair(0, 1, 4) * ab(0, 1);
    x += pair(1, 2, 5) * ab(1, 2);
    x += pair(0, 2, 6) * ab(0, 2);
  }
  return drive_with_hc(x);
}

OperatorMatrix series_hamiltonian(const ModelSpec& spec, const LaserSettings& lasers, int j_max) {
  spec.validate();
  if (spec.mode_count != 2) {
    throw ConfigError("variant", "the series Hamiltonian is defined for two modes only");
  }
  if (j_max < 0) throw ConfigError("j_max", "must be non-negative");
  const HilbertSpace space = spec.space();
  const double ex = spec.eta[0];
  const double ey = spec.eta[1];
  const double dw_x = std::exp(-ex * ex / 2.0);
  const double dw_y = std::exp(-ey * ey / 2.0);
  const double dw_xy = std::exp(-(ex * ex + ey * ey) / 4.0);
  const double sx = ex / std::sqrt(2.0);
  const double sy = ey / std::sqrt(2.0);

  OperatorMatrix x = OperatorMatrix::zero(space);
  for (int j = 0; j <= j_max; ++j) {
    const double norm = factorial(j) * factorial(j + 2);
    x += (dw_x * i_power(ex, 2 * j + 2) / norm * rabi_at(lasers, 1) * phase_at(lasers, 1)) *
         ladder(space, 0, j, j + 2);
    x += (dw_y * i_power(ey, 2 * j + 2) / norm * rabi_at(lasers, 2) * phase_at(lasers, 2)) *
         ladder(space, 1, j, j + 2);
  }
  for (int j = 0; j <= j_max; ++j) {
    for (int l = 0; j + l <= j_max; ++l) {
      const Complex cross = dw_xy * i_power(sx, 2 * j + 1) / (factorial(j) * factorial(j + 1)) *
                            i_power(sy, 2 * l + 1) / (factorial(l) * factorial(l + 1)) *
                            rabi_at(lasers, 3) * phase_at(lasers, 3);
      x += cross * (ladder(space, 0, j, j + 1) * ladder(space, 1, l, l + 1));
      // Carrier: at j = l = 0 this is the bare constant, with no mode operator.
      const Complex carrier = dw_xy * i_power(sx, 2 * j) / (factorial(j) * factorial(j)) *
                              i_power(-sy, 2 * l) / (factorial(l) * factorial(l)) *
                              rabi_at(lasers, 0) * phase_at(lasers, 0);
      x += carrier * (ladder(space, 0, j, j) * ladder(space, 1, l, l));
    }
  }
  return drive_with_hc(x);
}

OperatorMatrix ideal_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  const HilbertSpace space = spec.space();
  OperatorMatrix x = Complex(-spec.lambda_rate) * collective_square(space);
  x += Complex(spec.epsilon) * OperatorMatrix::identity(space);
  x *= std::exp(-kI * spec.phi0);
  return drive_with_hc(x);
}

OperatorMatrix higher_order_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  if (spec.mode_count != 2) {
    throw ConfigError("variant", "the higher-order Hamiltonian is defined for two modes only");
  }
  const HilbertSpace space = spec.space();
  const double lam = spec.lambda_rate;
  const double ex2 = spec.eta[0] * spec.eta[0];
  const double ey2 = spec.eta[1] * spec.eta[1];
  const OperatorMatrix id = OperatorMatrix::identity(space);
  const OperatorMatrix na = number(space, 0);
  const OperatorMatrix nb = number(space, 1);
  const OperatorMatrix a = annihilation(space, 0);
  const OperatorMatrix b = annihilation(space, 1);

  OperatorMatrix x = Complex(-lam) * ((id - Complex(ex2 / 3.0) * na) * (a * a));
  x -= Complex(lam) * ((id - Complex(ey2 / 3.0) * nb) * (b * b));
  x -= Complex(2.0 * lam) * ((id - Complex(ex2 / 4.0) * na - Complex(ey2 / 4.0) * nb) * (a * b));
  x += Complex(spec.epsilon) * (id - Complex(ex2 / 2.0) * na - Complex(ey2 / 2.0) * nb);
  x *= std::exp(-kI * spec.phi0);
  return drive_with_hc(x);
}

OperatorMatrix build_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  switch (spec.variant) {
    case HamiltonianVariant::kIdeal:
      return ideal_hamiltonian(spec);
    case HamiltonianVariant::kHigherOrder:
      return higher_order_hamiltonian(spec);
    case HamiltonianVariant::kSeries:
      return series_hamiltonian(spec, match_lasers(spec), spec.j_max);
  }
  throw ConfigError("variant", "unknown Hamiltonian variant");
}

std::vector<JumpOperator> jump_operators(const ModelSpec& spec) {
  spec.validate();
  const HilbertSpace space = spec.space();
  std::vector<JumpOperator> jumps;
  jumps.push_back({"S-", internal_op(space, InternalOp::kLower), spec.Gamma});
  static const char* names[3] = {"a", "b", "c"};
  for (std::size_t m = 0; m < spec.gamma_vib.size(); ++m) {
    if (spec.gamma_vib[m] > 0.0) {
      jumps.push_back({names[m], annihilation(space, static_cast<int>(m)), spec.gamma_vib[m]});
    }
  }
  if (spec.dephasing_rate > 0.0) {
    jumps.push_back({"S_z", internal_op(space, InternalOp::kInversion), spec.dephasing_rate});
  }
  return jumps;
}

}  // namespace catstab
