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

#include <benchmark/benchmark.h>

#include "catstab/dynamics.hpp"
#include "catstab/observables.hpp"

namespace {

using namespace catstab;

ModelSpec reference_spec(int dim) {
  ModelSpec s;
  s.mode_count = 2;
  s.eta = {0.15, 0.1};
  s.epsilon = 16.0;
  s.Gamma = 100.0;
  s.gamma_vib = {0.0005, 0.0005};
  s.variant = HamiltonianVariant::kHigherOrder;
  s.mode_dims = {dim, dim};
  return s;
}

// One Lindblad right-hand side with n Fock states per mode (dim 2 * n^2).
void BM_LindbladRhs(benchmark::State& state) {
  const ModelSpec s = reference_spec(static_cast<int>(state.range(0)));
  const LindbladGenerator gen(build_hamiltonian(s), jump_operators(s));
  const HilbertSpace space = s.space();
  const Matrix rho = DensityMatrix::from_pure(cat_state(space, s.cat_amplitude(), ParitySign::kEven)).entries();
  Matrix drho;
  for (auto _ : state) {
    gen.apply(rho, drho);
    benchmark::DoNotOptimize(drho.data());
  }
  state.counters["dim"] = static_cast<double>(space.total_dim());
}
BENCHMARK(BM_LindbladRhs)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_HamiltonianBuild(benchmark::State& state) {
  const ModelSpec s = reference_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(s));
}
BENCHMARK(BM_HamiltonianBuild)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_WignerPlaneCut(benchmark::State& state) {
  const HilbertSpace vib = HilbertSpace::vibrational({22, 22});
  const DensityMatrix rho = DensityMatrix::from_pure(cat_state(vib, 2.0, ParitySign::kOdd));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_plane_cut(rho, -1.0, 1.0, n));
}
BENCHMARK(BM_WignerPlaneCut)->Arg(21)->Arg(81)->Unit(benchmark::kMillisecond);

void BM_SteadyStateDirect(benchmark::State& state) {
  const HilbertSpace space({static_cast<int>(state.range(0))});
  const OperatorMatrix c = annihilation(space, 0);
  const OperatorMatrix fwd = (Complex(16.0) * OperatorMatrix::identity(space) - Complex(2.0) * (c * c)) *
                             internal_op(space, InternalOp::kRaise);
  const LindbladGenerator gen(fwd + fwd.adjoint(), {{"S-", internal_op(space, InternalOp::kLower), 100.0}});
  for (auto _ : state) benchmark::DoNotOptimize(steady_state_direct(gen, 1));
}
BENCHMARK(BM_SteadyStateDirect)->Arg(32)->Arg(44)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
