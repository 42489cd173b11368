// Copyright 2026 The povmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povmsim/state.h"

#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

QuantumState QuantumState::pure(Vector psi) {
  if (psi.size() < 1) throw DimensionError("QuantumState::pure: empty vector");
  for (Index i = 0; i < psi.size(); ++i) {
    if (!std::isfinite(psi(i).real()) || !std::isfinite(psi(i).imag())) {
      throw Error("QuantumState::pure: non-finite amplitude");
    }
  }
  const double deviation = std::abs(psi.norm() - 1.0);
  if (deviation > tol::kNorm) throw InvariantError("unit norm", deviation, tol::kNorm);
  Matrix rho = projector(psi);
  return QuantumState(std::move(rho), std::move(psi));
}

QuantumState QuantumState::density(Matrix rho) {
  require_square(rho, "QuantumState::density");
  const Index d = rho.rows();
  const double herm = hermiticity_defect(rho);
  if (herm > tol::scaled(tol::kHermitian, d)) {
    throw InvariantError("hermitian", herm, tol::scaled(tol::kHermitian, d));
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol::scaled(tol::kSum, d)) {
    throw InvariantError("unit trace", trace_dev, tol::scaled(tol::kSum, d));
  }
  const double lowest = hermitian_eigen(rho).values(0);
  if (lowest < -tol::scaled(tol::kPsd, d)) {
    throw InvariantError("positive semidefinite", -lowest, tol::scaled(tol::kPsd, d));
  }
  return QuantumState(std::move(rho), std::nullopt);
}

QuantumState QuantumState::basis(Index dim, Index k) {
  if (dim < 1 || k < 0 || k >= dim) throw DimensionError("QuantumState::basis: index out of range");
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return pure(std::move(v));
}

QuantumState QuantumState::maximally_mixed(Index dim) {
  if (dim < 1) throw DimensionError("QuantumState::maximally_mixed: dim < 1");
  return density(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

const Vector& QuantumState::vector() const {
  if (!psi_) throw PreconditionError("QuantumState::vector: state is not in pure form");
  return *psi_;
}

std::array<double, 3> QuantumState::bloch_vector() const {
  if (dim() != 2) throw DimensionError("bloch_vector: qubit states only");
  return {(rho_ * pauli_x()).trace().real(), (rho_ * pauli_y()).trace().real(),
          (rho_ * pauli_z()).trace().real()};
}

std::vector<NamedState> qubit_probe_states() {
  const double h = 1.0 / std::sqrt(2.0);
  auto make = [](Complex a, Complex b) {
    Vector v(2);
    v << a, b;
    return QuantumState::pure(v);
  };
  return {
      {"zero", make(1.0, 0.0)},
      {"one", make(0.0, 1.0)},
      {"plus", make(h, h)},
      {"minus", make(h, -h)},
      {"plus_i", make(h, Complex(0.0, h))},
      {"minus_i", make(h, Complex(0.0, -h))},
  };
}

std::optional<QuantumState> named_qubit_state(std::string_view name) {
  if (name == "mixed") return QuantumState::maximally_mixed(2);
  for (auto& s : qubit_probe_states()) {
    if (s.name == name) return s.state;
  }
  return std::nullopt;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  if (a.is_pure_form() && b.is_pure_form()) {
    const Matrix v = kron(a.vector(), b.vector());
    return QuantumState::pure(v.col(0));
  }
  return QuantumState::density(kron(a.density_matrix(), b.density_matrix()));
}

}  // namespace povmsim
