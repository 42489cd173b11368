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

#include "povmsim/circuit.h"

#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

namespace {

// Embeds a single-qubit operator at `qubit` of an n-qubit register.
Matrix on_qubit(const Matrix& op, int qubit, int num_qubits) {
  Matrix full = Matrix::Identity(1, 1);
  for (int q = 0; q < num_qubits; ++q) full = kron(full, q == qubit ? op : Matrix::Identity(2, 2));
  return full;
}

void check_qubit(int q, int num_qubits) {
  if (q < 0 || q >= num_qubits) throw PreconditionError("gate references qubit " + std::to_string(q));
}

}  // namespace

Matrix rz(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Matrix ry(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 2) throw PreconditionError("Circuit: only 1 or 2 qubits are supported");
}

void Circuit::add(Gate gate) {
  if (const auto* g = std::get_if<Su2Gate>(&gate)) {
    check_qubit(g->qubit, num_qubits_);
    if (g->u.rows() != 2 || g->u.cols() != 2) throw DimensionError("Su2Gate: payload must be 2x2");
    const double defect = max_abs_diff(g->u.adjoint() * g->u, Matrix::Identity(2, 2));
    if (defect > tol::scaled(tol::kSum, 2)) throw InvariantError("gate unitarity", defect, tol::scaled(tol::kSum, 2));
  } else if (const auto* c = std::get_if<CnotGate>(&gate)) {
    check_qubit(c->control, num_qubits_);
    check_qubit(c->target, num_qubits_);
    if (c->control == c->target) throw PreconditionError("CnotGate: control equals target");
  } else {
    check_qubit(std::get<HadamardGate>(gate).qubit, num_qubits_);
  }
  gates_.push_back(std::move(gate));
}

Circuit& Circuit::then(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) throw DimensionError("Circuit::then: qubit counts differ");
  for (const auto& g : other.gates_) gates_.push_back(g);
  return *this;
}

std::size_t Circuit::cnot_count() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += std::holds_alternative<CnotGate>(g) ? 1 : 0;
  return n;
}

Matrix Circuit::unitary() const {
  Matrix u = Matrix::Identity(dim(), dim());
  for (const auto& g : gates_) u = gate_matrix(g, num_qubits_) * u;
  return u;
}

Matrix gate_matrix(const Gate& gate, int num_qubits) {
  if (const auto* g = std::get_if<Su2Gate>(&gate)) return on_qubit(g->u, g->qubit, num_qubits);
  if (const auto* h = std::get_if<HadamardGate>(&gate)) return on_qubit(hadamard(), h->qubit, num_qubits);
  const auto& c = std::get<CnotGate>(gate);
  const Index dim = Index{1} << num_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  const Index cbit = Index{1} << (num_qubits - 1 - c.control);
  const Index tbit = Index{1} << (num_qubits - 1 - c.target);
  for (Index k = 0; k < dim; ++k) m((k & cbit) ? (k ^ tbit) : k, k) = 1.0;
  return m;
}

std::vector<int> gate_qubits(const Gate& gate) {
  if (const auto* g = std::get_if<Su2Gate>(&gate)) return {g->qubit};
  if (const auto* h = std::get_if<HadamardGate>(&gate)) return {h->qubit};
  const auto& c = std::get<CnotGate>(gate);
  return {c.control, c.target};
}

}  // namespace povmsim
