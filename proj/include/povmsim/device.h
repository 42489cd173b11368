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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "povmsim/circuit.h"
#include "povmsim/shot_record.h"
#include "povmsim/state.h"

namespace povmsim {

/// Depolarizing after every gate and a classical confusion channel at
/// readout, where a true '1' reads as '0' with probability readout_bias.
struct NoiseModel {
  double cnot = 0.0;          // two-qubit depolarizing after each CNOT
  double su2 = 0.0;           // single-qubit depolarizing after SU(2) and H
  double readout_bias = 0.0;  // per measured qubit

  static NoiseModel ideal() { return {}; }
  /// "ideal" or "ibmx4-like"; nullopt for unknown names.
  static std::optional<NoiseModel> preset(std::string_view name);
  static std::vector<std::string> preset_names();

  /// Throws PreconditionError if a parameter lies outside [0, 1].
  void validate() const;
};

/// rho -> (1 - p) rho + p Tr_Q(rho) (x) 1/2^|Q|, via the Pauli twirl over
/// the qubits Q.
Matrix depolarize(const Matrix& rho, double p, std::span<const int> qubits, int num_qubits);

/// Final density matrix after the noisy circuit, before readout.
Matrix evolve(const Circuit& circuit, const QuantumState& input, const NoiseModel& noise);

/// Readout distribution over register outcomes, including readout bias.
std::vector<double> outcome_distribution(const Circuit& circuit, const QuantumState& input,
                                         const NoiseModel& noise);

/// Applies the readout confusion channel to an exact distribution.
std::vector<double> apply_readout_bias(std::span<const double> p, int num_qubits, double bias);

/// Multinomial sampling of `shots` readouts.
ShotRecord run_shots(const Circuit& circuit, const QuantumState& input, const NoiseModel& noise,
                     std::size_t shots, std::uint64_t seed);

}  // namespace povmsim
