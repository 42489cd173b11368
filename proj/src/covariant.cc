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

#include "povmsim/covariant.h"

#include <cmath>
#include <numbers>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

Matrix shift_operator(Index d) {
  Matrix x = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

Matrix clock_operator(Index d) {
  Matrix z = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
  }
  return z;
}

CovariantPovm hw_covariant_povm(Index d, const QuantumState& fiducial) {
  if (d < 1 || fiducial.dim() != d) throw DimensionError("hw_covariant_povm: fiducial dimension mismatch");
  if (!fiducial.is_pure_form()) throw PreconditionError("hw_covariant_povm: fiducial must be a pure state");

  const Matrix x = shift_operator(d);
  const Matrix z = clock_operator(d);
  EffectList effects;
  Matrix xa = Matrix::Identity(d, d);
  for (Index a = 0; a < d; ++a) {
    Matrix zb = Matrix::Identity(d, d);
    for (Index b = 0; b < d; ++b) {
      const Vector psi = xa * zb * fiducial.vector();
      effects.push_back(projector(psi) / static_cast<double>(d));
      zb = z * zb;
    }
    xa = x * xa;
  }

  bool noncommuting = true;
  for (std::size_t i = 0; i < effects.size() && noncommuting; ++i) {
    for (std::size_t j = i + 1; j < effects.size(); ++j) {
      const Matrix c = effects[i] * effects[j] - effects[j] * effects[i];
      if (c.cwiseAbs().maxCoeff() <= tol::kOrthogonal) {
        noncommuting = false;
        break;
      }
    }
  }
  return {Povm::from_effects(std::move(effects)), noncommuting};
}

double max_success_bound_rank_one(const Povm& povm) {
  const Index d = povm.dim();
  std::vector<Vector> states;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const auto form = rank_one_form(povm.effect(i));
    if (!form || form->weight == 0.0) {
      throw PreconditionError("max_success_bound_rank_one: effect " + std::to_string(i + 1) +
                              " is not rank one");
    }
    states.push_back(form->vector);
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(states[i].dot(states[j])) <= tol::kOrthogonal) {
        throw PreconditionError("max_success_bound_rank_one: states " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " are orthogonal; the bound does not apply");
      }
    }
  }
  return 1.0 / static_cast<double>(d);
}

}  // namespace povmsim
