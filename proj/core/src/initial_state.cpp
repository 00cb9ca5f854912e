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

#include "catstab/initial_state.hpp"

#include <numeric>

namespace catstab {

std::string to_string(InitialState::Kind kind) {
  switch (kind) {
    case InitialState::Kind::kVacuum:
      return "vacuum";
    case InitialState::Kind::kSymmetricOnePhonon:
      return "symmetric_one_phonon";
    case InitialState::Kind::kFock:
      return "fock";
    case InitialState::Kind::kCoherent:
      return "coherent";
    case InitialState::Kind::kCat:
      return "cat";
  }
  return "unknown";
}

void validate(const InitialState& init, const HilbertSpace& space) {
  if (init.internal != kGround && init.internal != kExcited) {
    throw ConfigError("initial_state.internal", "must be g or e");
  }
  const auto modes = static_cast<std::size_t>(space.mode_count());
  switch (init.kind) {
    case InitialState::Kind::kFock:
      if (init.occupations.size() != modes) {
        throw ConfigError("initial_state.occupations", "needs one occupation per mode");
      }
      for (std::size_t m = 0; m < modes; ++m) {
        const int n = init.occupations[m];
        if (n < 0 || n >= space.mode_dims()[m]) {
          throw ConfigError("initial_state.occupations",
                            "occupation " + std::to_string(n) + " of mode " + std::to_string(m) +
                                " must be below mode_dim " + std::to_string(space.mode_dims()[m]));
        }
      }
      break;
    case InitialState::Kind::kCoherent:
      if (init.amplitudes.size() != modes) {
        throw ConfigError("initial_state.amplitudes", "needs one amplitude per mode");
      }
      for (std::size_t m = 0; m < modes; ++m) {
        if (std::norm(init.amplitudes[m]) > fock::max_amplitude_squared(space.mode_dims()[m])) {
          throw ConfigError("initial_state.amplitudes",
                            "amplitude of mode " + std::to_string(m) + " exceeds the truncation limit");
        }
      }
      break;
    case InitialState::Kind::kCat:
      for (int d : space.mode_dims()) {
        if (std::norm(init.alpha) > fock::max_amplitude_squared(d)) {
          throw ConfigError("initial_state.alpha", "cat amplitude exceeds the truncation limit");
        }
      }
      if (init.sign == ParitySign::kOdd && init.alpha == Complex(0.0)) {
        throw ConfigError("initial_state.alpha", "odd cat needs a nonzero amplitude");
      }
      break;
    case InitialState::Kind::kVacuum:
    case InitialState::Kind::kSymmetricOnePhonon:
      break;
  }
}

StateVector prepare(const InitialState& init, const HilbertSpace& space) {
  validate(init, space);
  switch (init.kind) {
    case InitialState::Kind::kVacuum: {
      const std::vector<int> zeros(static_cast<std::size_t>(space.mode_count()), 0);
      return fock_state(space, zeros, init.internal);
    }
    case InitialState::Kind::kSymmetricOnePhonon:
      return symmetric_one_phonon(space, init.internal);
    case InitialState::Kind::kFock:
      return fock_state(space, init.occupations, init.internal);
    case InitialState::Kind::kCoherent:
      return coherent_state(space, init.amplitudes, init.internal);
    case InitialState::Kind::kCat: {
      StateVector cat = cat_state(space, init.alpha, init.sign);
      if (init.internal == kGround || !space.has_internal()) return cat;
      // Move the vibrational amplitudes onto |e>.
      const Index vd = space.vibrational_dim();
      Vector amps = Vector::Zero(space.total_dim());
      amps.segment(vd, vd) = cat.amplitudes().segment(0, vd);
      return {space, std::move(amps)};
    }
  }
  throw ConfigError("initial_state.kind", "unknown kind");
}

std::optional<int> initial_parity(const InitialState& init) {
  switch (init.kind) {
    case InitialState::Kind::kVacuum:
      return 1;
    case InitialState::Kind::kSymmetricOnePhonon:
      return -1;
    case InitialState::Kind::kFock: {
      const int total = std::accumulate(init.occupations.begin(), init.occupations.end(), 0);
      return total % 2 == 0 ? 1 : -1;
    }
    case InitialState::Kind::kCat:
      return static_cast<int>(init.sign);
    case InitialState::Kind::kCoherent:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace catstab
