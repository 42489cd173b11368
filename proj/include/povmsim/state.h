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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "povmsim/linalg.h"

namespace povmsim {

/// A density operator, optionally remembering the pure-state vector it was
/// built from. Immutable once constructed.
class QuantumState {
 public:
  /// Unit vector |psi>; norm must be 1 within tol::kNorm.
  static QuantumState pure(Vector psi);
  /// Hermitian, positive semidefinite, unit-trace matrix.
  static QuantumState density(Matrix rho);
  static QuantumState basis(Index dim, Index k);
  static QuantumState maximally_mixed(Index dim);

  Index dim() const { return rho_.rows(); }
  const Matrix& density_matrix() const { return rho_; }
  bool is_pure_form() const { return psi_.has_value(); }
  /// Throws PreconditionError if the state was not built from a vector.
  const Vector& vector() const;

  /// (<sigma_x>, <sigma_y>, <sigma_z>); qubits only.
  std::array<double, 3> bloch_vector() const;

 private:
  QuantumState(Matrix rho, std::optional<Vector> psi) : rho_(std::move(rho)), psi_(std::move(psi)) {}

  Matrix rho_;
  std::optional<Vector> psi_;
};

/// The six Pauli eigenstates, named zero, one, plus, minus, plus_i, minus_i.
struct NamedState {
  std::string name;
  QuantumState state;
};
std::vector<NamedState> qubit_probe_states();

/// Resolves one of the qubit_probe_states() names, or "mixed".
std::optional<QuantumState> named_qubit_state(std::string_view name);

QuantumState tensor(const QuantumState& a, const QuantumState& b);

}  // namespace povmsim
