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

#include "povmsim/circuit.h"

namespace povmsim {

/// U = e^{i phase} (A1 (x) B1) exp(i(a XX + b YY + c ZZ)) (A2 (x) B2).
struct KakDecomposition {
  Matrix a1, b1, a2, b2;  // SU(2) factors; A acts on qubit 0
  std::array<double, 3> coefficients;
  double phase;
};

KakDecomposition kak_decomposition(const Matrix& u);

/// Splits W = A (x) B for a 4x4 unitary W of product form, with det A = 1.
/// Returns the residual max|W - A (x) B| alongside.
struct KronFactors {
  Matrix a, b;
  double residual;
};
KronFactors kron_factor(const Matrix& w);

/// Circuit of at most 3 CNOTs and SU(2) gates equal to `u` up to global
/// phase. With one_way set, every CNOT has control qubit 1 and target qubit
/// 0; the other orientation is conjugated by Hadamards. Throws
/// InvariantError if the residual exceeds 1e-8.
Circuit decompose_two_qubit(const Matrix& u, bool one_way = true);

/// max |u - e^{i phi} v| for the best global phase phi.
double phase_insensitive_distance(const Matrix& u, const Matrix& v);

}  // namespace povmsim
