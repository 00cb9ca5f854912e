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

#include "catstab/observables.hpp"

#include <cmath>

namespace catstab {

DensityMatrix partial_trace_internal(const DensityMatrix& rho) {
  const HilbertSpace& space = rho.space();
  if (!space.has_internal()) return rho;
  const Index vd = space.vibrational_dim();
  const Matrix& m = rho.entries();
  Matrix out = m.topLeftCorner(vd, vd) + m.bottomRightCorner(vd, vd);
  return {space.vibrational_space(), std::move(out)};
}

DensityMatrix trace_out_mode(const DensityMatrix& rho_vib, int mode_index) {
  const HilbertSpace& space = rho_vib.space();
  if (space.has_internal()) throw DimensionError("trace_out_mode expects a vibrational-only state");
  if (space.mode_count() < 2) throw DimensionError("cannot trace out the only mode");
  const int dim = space.mode_dim(mode_index);
  const Index inner = space.mode_stride(mode_index);
  const Index outer = space.vibrational_dim() / (inner * dim);

  std::vector<int> dims;
  for (int m = 0; m < space.mode_count(); ++m) {
    if (m != mode_index) dims.push_back(space.mode_dim(m));
  }
  const HilbertSpace reduced = HilbertSpace::vibrational(dims);
  const Index rd = reduced.total_dim();
  Matrix out = Matrix::Zero(rd, rd);
  const Matrix& r = rho_vib.entries();
  // full index = (o * dim + k) * inner + i; reduced index = o * inner + i.
  for (Index o1 = 0; o1 < outer; ++o1) {
    for (Index i1 = 0; i1 < inner; ++i1) {
      for (Index o2 = 0; o2 < outer; ++o2) {
        for (Index i2 = 0; i2 < inner; ++i2) {
          Complex acc = 0.0;
          for (Index k = 0; k < dim; ++k) acc += r((o1 * dim + k) * inner + i1, (o2 * dim + k) * inner + i2);
          out(o1 * inner + i1, o2 * inner + i2) = acc;
        }
      }
    }
  }
  return {reduced, std::move(out)};
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& target) {
  StateVector psi = target;
  if (!rho.space().has_internal() && target.space().has_internal()) {
    const Index vd = target.space().vibrational_dim();
    if (target.amplitudes().segment(vd, vd).norm() > 1e-12) {
      throw DimensionError("fidelity_pure: target has an excited-state component");
    }
    psi = target.vibrational_component(kGround);
  }
  require_same_space(rho.space(), psi.space(), "fidelity_pure");
  const Vector& v = psi.amplitudes();
  return v.dot(rho.entries() * v).real();
}

double parity_expectation(const DensityMatrix& rho) {
  const HilbertSpace& space = rho.space();
  double acc = 0.0;
  for (Index i = 0; i < space.total_dim(); ++i) acc += space.phonon_parity(i) * rho.entries()(i, i).real();
  return acc;
}

double excited_population(const DensityMatrix& rho) {
  const HilbertSpace& space = rho.space();
  if (!space.has_internal()) return 0.0;
  const Index vd = space.vibrational_dim();
  return rho.entries().diagonal().segment(vd, vd).real().sum();
}

std::vector<ObservableProbe> standard_probes(const StateVector& target) {
  std::vector<ObservableProbe> probes;
  probes.push_back({"fidelity", [target](const DensityMatrix& rho) {
                      return fidelity_pure(partial_trace_internal(rho), target);
                    }});
  probes.push_back({"parity", [](const DensityMatrix& rho) { return parity_expectation(rho); }});
  probes.push_back({"pop_e", [](const DensityMatrix& rho) { return excited_population(rho); }});
  probes.push_back({"purity", [](const DensityMatrix& rho) { return partial_trace_internal(rho).purity(); }});
  return probes;
}

double wigner_triple_origin(const DensityMatrix& rho_vib) {
  if (rho_vib.space().mode_count() != 3) throw DimensionError("wigner_triple_origin needs three modes");
  const double two_over_pi = 2.0 / std::numbers::pi;
  return two_over_pi * two_over_pi * two_over_pi * parity_expectation(rho_vib);
}

}  // namespace catstab
