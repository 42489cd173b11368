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

#include "povmsim/born.h"

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

std::vector<double> born_values(const QuantumState& state, const EffectList& effects) {
  std::vector<double> out;
  out.reserve(effects.size());
  for (const auto& e : effects) {
    if (e.rows() != state.dim()) throw DimensionError("born_values: dimension mismatch");
    out.push_back((e * state.density_matrix()).trace().real());
  }
  return out;
}

std::vector<double> born_probabilities(const QuantumState& state, const Povm& povm) {
  if (state.dim() != povm.dim()) {
    throw DimensionError("born_probabilities: state dim " + std::to_string(state.dim()) +
                         " != povm dim " + std::to_string(povm.dim()));
  }
  std::vector<double> p(povm.size());
  const Matrix& rho = state.density_matrix();
  const double limit = tol::scaled(tol::kPsd, state.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    // tr(M rho) without forming the product.
    double v = povm.effect(i).cwiseProduct(rho.transpose()).sum().real();
    if (v < -limit) throw InvariantError("non-negative probability", -v, limit);
    if (v < 0.0) v = 0.0;
    p[i] = v;
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace povmsim
