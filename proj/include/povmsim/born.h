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

#include <vector>

#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim {

/// Pr(i | rho, M) = tr(M_i rho). Round-off negativity up to tol::kPsd is
/// clamped to zero and the vector renormalized; anything larger throws.
std::vector<double> born_probabilities(const QuantumState& state, const Povm& povm);

/// Raw tr(M_i rho) for an unvalidated list; no clamping.
std::vector<double> born_values(const QuantumState& state, const EffectList& effects);

}  // namespace povmsim
