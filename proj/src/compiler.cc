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

#include "povmsim/compiler.h"

#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"
#include "povmsim/two_qubit.h"

namespace povmsim {

Circuit compile_postselection_circuit(const Vector& psi) {
  if (psi.size() != 2) throw DimensionError("compile_postselection_circuit: qubit state expected");
  const double defect = std::abs(psi.norm() - 1.0);
  if (defect > tol::kNorm) throw InvariantError("unit norm", defect, tol::kNorm);
  // Rows <psi| and <psi_perp| with psi_perp = (-conj psi1, conj psi0); det 1.
  Matrix u(2, 2);
  u << std::conj(psi(0)), std::conj(psi(1)), -psi(1), psi(0);
  Circuit circuit(1);
  if ((u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() > tol::kNorm) circuit.add(Su2Gate{u, 0});
  return circuit;
}

Circuit compile_naimark_circuit(const NaimarkDilation& dilation, bool one_way) {
  if (dilation.mode != DilationMode::kQubitRegister || dilation.ext_dim() != 4 || dilation.source.dim() != 2) {
    throw PreconditionError("compile_naimark_circuit: needs a two-qubit register dilation of a qubit POVM");
  }
  return decompose_two_qubit(dilation.unitary, one_way);
}

Circuit with_readout_flips(Circuit circuit, std::size_t mask) {
  const int n = circuit.num_qubits();
  if (mask >= (std::size_t{1} << n)) throw PreconditionError("with_readout_flips: mask outside the register");
  for (int q = 0; q < n; ++q) {
    if (mask & (std::size_t{1} << (n - 1 - q))) circuit.add(Su2Gate{pauli_x(), q});
  }
  return circuit;
}

}  // namespace povmsim
