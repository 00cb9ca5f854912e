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

#include "catstab/dump.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace catstab::dump {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "catstab-dump";
constexpr int kVersion = 1;
constexpr const char* kOrdering = "internal-major";

json header(const HilbertSpace& space, const char* kind) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["kind"] = kind;
  j["internal_levels"] = space.internal_levels();
  j["mode_dims"] = space.mode_dims();
  j["basis_ordering"] = kOrdering;
  j["entries"] = json::array();
  return j;
}

void push(json& j, Index row, Index col, Complex v) {
  j["entries"].push_back(json::array({row, col, v.real(), v.imag()}));
}

struct Parsed {
  HilbertSpace space;
  json entries;
};

Parsed parse(std::istream& is, const char* expected_kind) {
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw DimensionError(std::string("malformed dump: ") + e.what());
  }
  if (j.value("format", "") != kFormat) throw DimensionError("not a catstab dump");
  if (j.value("version", 0) != kVersion) throw DimensionError("unsupported dump version");
  if (j.value("kind", "") != expected_kind) {
    throw DimensionError(std::string("dump holds '") + j.value("kind", "") + "', expected '" +
                         expected_kind + "'");
  }
  if (j.value("basis_ordering", "") != kOrdering) throw DimensionError("unsupported basis ordering");
  return {HilbertSpace(j.at("mode_dims").get<std::vector<int>>(), j.at("internal_levels").get<int>()),
          j.at("entries")};
}

template <typename F>
void for_each_entry(const Parsed& p, Index rows, Index cols, F&& f) {
  for (const auto& e : p.entries) {
    const auto r = e.at(0).get<Index>();
    const auto c = e.at(1).get<Index>();
    if (r < 0 || c < 0 || r >= rows || c >= cols) throw DimensionError("dump entry out of range");
    f(r, c, Complex(e.at(2).get<double>(), e.at(3).get<double>()));
  }
}

}  // namespace

void write(std::ostream& os, const DensityMatrix& rho) {
  json j = header(rho.space(), "density_matrix");
  const Matrix& m = rho.entries();
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != Complex(0.0)) push(j, r, c, m(r, c));
    }
  }
  os << j.dump() << '\n';
}

void write(std::ostream& os, const StateVector& psi) {
  json j = header(psi.space(), "state_vector");
  for (Index r = 0; r < psi.dim(); ++r) {
    if (psi.amplitudes()(r) != Complex(0.0)) push(j, r, 0, psi.amplitudes()(r));
  }
  os << j.dump() << '\n';
}

void write(std::ostream& os, const OperatorMatrix& op) {
  json j = header(op.space(), "operator");
  const SparseMatrix& m = op.entries();
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (it.value() != Complex(0.0)) push(j, it.row(), it.col(), it.value());
    }
  }
  os << j.dump() << '\n';
}

DensityMatrix read_density_matrix(std::istream& is) {
  const Parsed p = parse(is, "density_matrix");
  const Index n = p.space.total_dim();
  Matrix m = Matrix::Zero(n, n);
  for_each_entry(p, n, n, [&](Index r, Index c, Complex v) { m(r, c) = v; });
  return {p.space, std::move(m)};
}

StateVector read_state_vector(std::istream& is) {
  const Parsed p = parse(is, "state_vector");
  const Index n = p.space.total_dim();
  Vector v = Vector::Zero(n);
  for_each_entry(p, n, 1, [&](Index r, Index, Complex x) { v(r) = x; });
  return {p.space, std::move(v)};
}

OperatorMatrix read_operator(std::istream& is) {
  const Parsed p = parse(is, "operator");
  const Index n = p.space.total_dim();
  std::vector<Eigen::Triplet<Complex>> trips;
  for_each_entry(p, n, n, [&](Index r, Index c, Complex v) { trips.emplace_back(r, c, v); });
  SparseMatrix m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  return {p.space, std::move(m)};
}

void save(const std::string& path, const DensityMatrix& rho) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  write(os, rho);
}

DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return read_density_matrix(is);
}

}  // namespace catstab::dump
