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

#ifndef CATSTAB_HILBERT_SPACE_HPP
#define CATSTAB_HILBERT_SPACE_HPP

#include <span>
#include <string>
#include <vector>

#include "catstab/types.hpp"

namespace catstab {

/// Internal (electronic) level labels. The ground state is index 0.
enum InternalLevel : int { kGround = 0, kExcited = 1 };

/// Tensor-product layout: internal two-level factor followed by one truncated
/// Fock space per vibrational mode.
///
/// Basis ordering is internal-major: the internal level is the slowest index
/// and the last mode the fastest, i.e. for two modes
/// `index = s * (N_a * N_b) + n_a * N_b + n_b`.
///
/// A space with `internal_levels() == 1` carries only the vibrational modes;
/// it is what partial traces over the internal factor produce.
class HilbertSpace {
 public:
  struct BasisLabel {
    int internal = kGround;
    std::vector<int> occupations;
  };

  explicit HilbertSpace(std::vector<int> mode_dims, int internal_levels = 2);

  /// Space of the vibrational modes alone.
  static HilbertSpace vibrational(std::vector<int> mode_dims) {
    return HilbertSpace(std::move(mode_dims), 1);
  }

  int internal_levels() const noexcept { return internal_levels_; }
  bool has_internal() const noexcept { return internal_levels_ == 2; }
  int mode_count() const noexcept { return static_cast<int>(mode_dims_.size()); }
  int mode_dim(int mode_index) const;
  const std::vector<int>& mode_dims() const noexcept { return mode_dims_; }
  Index vibrational_dim() const noexcept { return vibrational_dim_; }
  Index total_dim() const noexcept { return internal_levels_ * vibrational_dim_; }

  /// Stride of a mode inside the vibrational index.
  Index mode_stride(int mode_index) const;

  Index index(int internal, std::span<const int> occupations) const;
  BasisLabel label(Index index) const;
  int phonon_number(Index index) const;
  /// (-1)^(total phonon number) of a basis state.
  int phonon_parity(Index index) const { return phonon_number(index) % 2 == 0 ? 1 : -1; }

  HilbertSpace vibrational_space() const { return vibrational(mode_dims_); }
  HilbertSpace with_internal() const { return HilbertSpace(mode_dims_, 2); }

  std::string describe() const;

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  std::vector<int> mode_dims_;
  int internal_levels_;
  Index vibrational_dim_;
};

/// Throws DimensionError when the two spaces differ.
void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* context);

}  // namespace catstab

#endif  // CATSTAB_HILBERT_SPACE_HPP
