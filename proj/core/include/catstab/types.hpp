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

#ifndef CATSTAB_TYPES_HPP
#define CATSTAB_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace catstab {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
// Column-major so that dense * sparse products stream through memory.
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

inline constexpr Complex kI{0.0, 1.0};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on incompatible spaces or have mismatched shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A Fock truncation is too small for the requested amplitude.
class TruncationError : public Error {
 public:
  TruncationError(int mode_index, const std::string& what)
      : Error(what), mode_index_(mode_index) {}
  int mode_index() const noexcept { return mode_index_; }

 private:
  int mode_index_;
};

/// Invalid user-supplied parameters. `field` names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + field + ": " + what
                        : field + ": " + what),
        field_(std::move(field)),
        line_(line) {}
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Integration or linear-algebra failure (stiffness, positivity loss, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The steady-state null space is not one-dimensional.
class DegenerateSteadyStateError : public NumericalError {
 public:
  DegenerateSteadyStateError(Index dimension, const std::string& what)
      : NumericalError(what), dimension_(dimension) {}
  Index null_space_dimension() const noexcept { return dimension_; }

 private:
  Index dimension_;
};

}  // namespace catstab

#endif  // CATSTAB_TYPES_HPP
