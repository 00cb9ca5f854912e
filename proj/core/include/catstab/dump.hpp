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

#ifndef CATSTAB_DUMP_HPP
#define CATSTAB_DUMP_HPP

#include <iosfwd>
#include <string>

#include "catstab/operators.hpp"
#include "catstab/states.hpp"

namespace catstab::dump {

// A dump is a JSON object
//
//   {
//     "format": "catstab-dump", "version": 1,
//     "kind": "density_matrix" | "state_vector" | "operator",
//     "internal_levels": 2, "mode_dims": [22, 22],
//     "basis_ordering": "internal-major",
//     "entries": [[row, col, re, im], ...]
//   }
//
// Only nonzero entries are listed. State vectors use col = 0. Doubles are
// written with round-trip precision, so write -> read is exact.

void write(std::ostream& os, const DensityMatrix& rho);
void write(std::ostream& os, const StateVector& psi);
void write(std::ostream& os, const OperatorMatrix& op);

DensityMatrix read_density_matrix(std::istream& is);
StateVector read_state_vector(std::istream& is);
OperatorMatrix read_operator(std::istream& is);

void save(const std::string& path, const DensityMatrix& rho);
DensityMatrix load_density_matrix(const std::string& path);

}  // namespace catstab::dump

#endif  // CATSTAB_DUMP_HPP
