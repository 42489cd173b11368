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

#include <variant>
#include <vector>

#include "povmsim/linalg.h"

namespace povmsim {

// Qubit 0 is the most significant bit of a basis index.

struct Su2Gate {
  Matrix u;  // 2x2 unitary
  int qubit;
};

struct CnotGate {
  int control;
  int target;
};

struct HadamardGate {
  int qubit;
};

using Gate = std::variant<Su2Gate, CnotGate, HadamardGate>;

Matrix rz(double theta);  // diag(e^{-i theta/2}, e^{i theta/2})
Matrix ry(double theta);  // exp(-i theta Y / 2)
Matrix hadamard();

class Circuit {
 public:
  /// One or two qubits, all measured at the end.
  explicit Circuit(int num_qubits);

  void add(Gate gate);
  Circuit& then(const Circuit& other);

  int num_qubits() const { return num_qubits_; }
  Index dim() const { return Index{1} << num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t cnot_count() const;

  /// Product of the gate matrices in time order.
  Matrix unitary() const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// The gate as a matrix on the full register.
Matrix gate_matrix(const Gate& gate, int num_qubits);

/// Qubits a gate acts on.
std::vector<int> gate_qubits(const Gate& gate);

}  // namespace povmsim
