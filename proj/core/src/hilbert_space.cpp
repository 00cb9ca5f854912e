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

#include "catstab/hilbert_space.hpp"

#include <sstream>

namespace catstab {

HilbertSpace::HilbertSpace(std::vector<int> mode_dims, int internal_levels)
    : mode_dims_(std::move(mode_dims)), internal_levels_(internal_levels), vibrational_dim_(1) {
  if (internal_levels_ != 1 && internal_levels_ != 2) {
    throw DimensionError("internal_levels must be 1 or 2");
  }
  if (mode_dims_.empty()) {
    throw DimensionError("a Hilbert space needs at least one vibrational mode");
  }
  for (std::size_t m = 0; m < mode_dims_.size(); ++m) {
    if (mode_dims_[m] < 2) {
      throw DimensionError("mode " + std::to_string(m) + " has dimension " +
                           std::to_string(mode_dims_[m]) + " (minimum is 2)");
    }
    vibrational_dim_ *= mode_dims_[m];
  }
}

int HilbertSpace::mode_dim(int mode_index) const {
  if (mode_index < 0 || mode_index >= mode_count()) {
    throw DimensionError("mode index " + std::to_string(mode_index) + " out of range for " +
                         std::to_string(mode_count()) + " modes");
  }
  return mode_dims_[static_cast<std::size_t>(mode_index)];
}

Index HilbertSpace::mode_stride(int mode_index) const {
  mode_dim(mode_index);
  Index stride = 1;
  for (int m = mode_count() - 1; m > mode_index; --m) stride *= mode_dims_[static_cast<std::size_t>(m)];
  return stride;
}

Index HilbertSpace::index(int internal, std::span<const int> occupations) const {
  if (internal < 0 || internal >= internal_levels_) {
    throw DimensionError("internal level " + std::to_string(internal) + " out of range");
  }
  if (static_cast<int>(occupations.size()) != mode_count()) {
    throw DimensionError("expected " + std::to_string(mode_count()) + " occupations, got " +
                         std::to_string(occupations.size()));
  }
  Index idx = 0;
  for (int m = 0; m < mode_count(); ++m) {
    const int n = occupations[static_cast<std::size_t>(m)];
    if (n < 0 || n >= mode_dims_[static_cast<std::size_t>(m)]) {
      throw DimensionError("occupation " + std::to_string(n) + " outside truncation of mode " +
                           std::to_string(m));
    }
    idx = idx * mode_dims_[static_cast<std::size_t>(m)] + n;
  }
  return internal * vibrational_dim_ + idx;
}

HilbertSpace::BasisLabel HilbertSpace::label(Index index) const {
  if (index < 0 || index >= total_dim()) throw DimensionError("basis index out of range");
  BasisLabel out;
  out.internal = static_cast<int>(index / vibrational_dim_);
  Index rest = index % vibrational_dim_;
  out.occupations.assign(mode_dims_.size(), 0);
  for (int m = mode_count() - 1; m >= 0; --m) {
    const auto d = mode_dims_[static_cast<std::size_t>(m)];
    out.occupations[static_cast<std::size_t>(m)] = static_cast<int>(rest % d);
    rest /= d;
  }
  return out;
}

int HilbertSpace::phonon_number(Index index) const {
  Index rest = index % vibrational_dim_;
  int total = 0;
  for (int m = mode_count() - 1; m >= 0; --m) {
    const auto d = mode_dims_[static_cast<std::size_t>(m)];
    total += static_cast<int>(rest % d);
    rest /= d;
  }
  return total;
}

std::string HilbertSpace::describe() const {
  std::ostringstream os;
  os << internal_levels_;
  for (int d : mode_dims_) os << "x" << d;
  os << " (dim " << total_dim() << ")";
  return os.str();
}

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* context) {
  if (!(a == b)) {
    throw DimensionError(std::string(context) + ": space mismatch " + a.describe() + " vs " +
                         b.describe());
  }
}

}  // namespace catstab
