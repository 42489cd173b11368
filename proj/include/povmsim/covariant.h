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

#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim {

// Clock (Z) and shift (X) operators on C^d: X|k> = |k+1>, Z|k> = w^k |k>.
Matrix shift_operator(Index d);
Matrix clock_operator(Index d);

struct CovariantPovm {
  Povm povm;
  /// True when every pair of effects has a commutator of norm above
  /// tol::kOrthogonal.
  bool pairwise_noncommuting;
};

/// The d^2 effects (1/d) X^a Z^b |f><f| Z^-b X^-a, outcome index a*d + b.
/// Any fiducial works; completeness follows from group averaging.
CovariantPovm hw_covariant_povm(Index d, const QuantumState& fiducial);

/// 1/d for rank-one POVMs whose states are pairwise non-orthogonal. Throws
/// PreconditionError if an effect is not rank one or some pair has overlap
/// at most tol::kOrthogonal.
double max_success_bound_rank_one(const Povm& povm);

}  // namespace povmsim
