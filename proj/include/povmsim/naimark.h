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

#include <iosfwd>
#include <vector>

#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim {

enum class DilationMode {
  kAbstract,       // d_ext = n, system basis |k> sits at index k
  kQubitRegister,  // d_ext = smallest power of two >= n, system (x) ancilla
};

/// Unitary U on C^{d_ext} with U E = V, where V is the isometry with rows
/// sqrt(a_i) <psi_i| for i < n (zero rows beyond) and E embeds C^d.
///
/// In qubit-register mode the system occupies the most significant qubits
/// and the ancilla register starts in |0...0>, so system basis state |k>
/// maps to index k * (d_ext / d).
struct NaimarkDilation {
  Povm source;
  DilationMode mode;
  Matrix unitary;
  std::vector<Index> embedding;  // embedding[k] = image index of |k>

  Index ext_dim() const { return unitary.rows(); }
  /// The d_ext x d matrix of the embedding.
  Matrix embedding_matrix() const;
  /// U restricted to the embedded subspace; equals the isometry V.
  Matrix isometry() const;
};

/// Requires rank-one effects (zero effects allowed) and n >= d; qubit
/// register mode also requires d to be a power of two.
NaimarkDilation naimark_dilation(const Povm& povm, DilationMode mode);

/// The input E rho E^dagger on the dilated space, ancilla in |0...0>.
QuantumState embed_state(const NaimarkDilation& dilation, const QuantumState& state);

/// Exact computational-basis distribution of U (rho embedded) U^dagger.
std::vector<double> dilated_statistics(const NaimarkDilation& dilation, const QuantumState& state);

}  // namespace povmsim
