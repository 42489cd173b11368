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

#include "povmsim/circuit.h"
#include "povmsim/naimark.h"

namespace povmsim {

/// One SU(2) gate taking |psi> to |0>, so reading 0 is the '+' outcome of
/// (|psi><psi|, 1 - |psi><psi|).
Circuit compile_postselection_circuit(const Vector& psi);

/// Two-qubit circuit for a qubit-register dilation of a qubit POVM with at
/// most 4 outcomes: system on qubit 0, ancilla on qubit 1.
Circuit compile_naimark_circuit(const NaimarkDilation& dilation, bool one_way = true);

/// Appends x gates on the register bits set in `mask` before readout.
Circuit with_readout_flips(Circuit circuit, std::size_t mask);

}  // namespace povmsim
