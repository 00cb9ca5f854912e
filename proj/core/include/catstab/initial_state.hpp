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

#ifndef CATSTAB_INITIAL_STATE_HPP
#define CATSTAB_INITIAL_STATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "catstab/states.hpp"

namespace catstab {

/// Tagged description of a starting state.
struct InitialState {
  enum class Kind { kVacuum, kSymmetricOnePhonon, kFock, kCoherent, kCat };

  Kind kind = Kind::kVacuum;
  int internal = kGround;
  std::vector<int> occupations;     // kFock
  std::vector<Complex> amplitudes;  // kCoherent
  Complex alpha{0.0, 0.0};          // kCat
  ParitySign sign = ParitySign::kEven;

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

std::string to_string(InitialState::Kind kind);

/// Throws ConfigError when the description does not fit the space.
void validate(const InitialState& init, const HilbertSpace& space);

StateVector prepare(const InitialState& init, const HilbertSpace& space);

/// Phonon parity (+1 / -1) when the state is a parity eigenstate.
std::optional<int> initial_parity(const InitialState& init);

}  // namespace catstab

#endif  // CATSTAB_INITIAL_STATE_HPP
