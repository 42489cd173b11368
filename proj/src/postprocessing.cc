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

#include "povmsim/postprocessing.h"

#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

PostProcessingMap PostProcessingMap::from_matrix(Eigen::MatrixXd q) {
  if (q.rows() < 1 || q.cols() < 1) throw DimensionError("PostProcessingMap: empty map");
  if (!q.allFinite()) throw Error("PostProcessingMap: non-finite entries");
  const double lowest = q.minCoeff();
  if (lowest < 0.0) throw InvariantError("non-negative conditional probability", -lowest, 0.0);
  for (Index k = 0; k < q.cols(); ++k) {
    const double dev = std::abs(q.col(k).sum() - 1.0);
    if (dev > tol::kSum) throw InvariantError("column sums to one", dev, tol::kSum);
  }
  return PostProcessingMap(std::move(q));
}

PostProcessingMap PostProcessingMap::identity(std::size_t n) {
  return PostProcessingMap(Eigen::MatrixXd::Identity(static_cast<Index>(n), static_cast<Index>(n)));
}

PostProcessingMap PostProcessingMap::deterministic(std::size_t outputs,
                                                   std::span<const std::size_t> assignment) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(static_cast<Index>(outputs),
                                            static_cast<Index>(assignment.size()));
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (assignment[k] >= outputs) throw DimensionError("PostProcessingMap: assignment out of range");
    q(static_cast<Index>(assignment[k]), static_cast<Index>(k)) = 1.0;
  }
  return from_matrix(std::move(q));
}

PostProcessingMap PostProcessingMap::glue(std::size_t n, std::size_t a, std::size_t b) {
  if (!(a < b && b < n)) throw PreconditionError("PostProcessingMap::glue: need a < b < n");
  std::vector<std::size_t> assignment(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == b) {
      assignment[k] = a;
    } else {
      assignment[k] = k < b ? k : k - 1;
    }
  }
  return deterministic(n - 1, assignment);
}

PostProcessingMap PostProcessingMap::then(const PostProcessingMap& next) const {
  if (next.inputs() != outputs()) throw DimensionError("PostProcessingMap::then: size mismatch");
  return PostProcessingMap(next.q_ * q_);
}

EffectList apply_postprocessing(const EffectList& effects, const PostProcessingMap& map) {
  if (map.inputs() != effects.size()) {
    throw DimensionError("apply_postprocessing: map expects " + std::to_string(map.inputs()) +
                         " outcomes, got " + std::to_string(effects.size()));
  }
  const Index d = effects.front().rows();
  EffectList out(map.outputs(), Matrix::Zero(d, d));
  for (std::size_t j = 0; j < map.outputs(); ++j) {
    for (std::size_t k = 0; k < map.inputs(); ++k) {
      const double w = map(j, k);
      if (w != 0.0) out[j] += w * effects[k];
    }
  }
  return out;
}

Povm apply_postprocessing(const Povm& povm, const PostProcessingMap& map) {
  return Povm::from_effects(apply_postprocessing(povm.matrices(), map));
}

Povm convex_combination(std::span<const WeightedPovm> terms) {
  if (terms.empty()) throw PreconditionError("convex_combination: no terms");
  const std::size_t n = terms.front().povm.size();
  const Index d = terms.front().povm.dim();
  double total = 0.0;
  for (const auto& t : terms) {
    if (t.weight < 0.0) throw InvariantError("non-negative weight", -t.weight, 0.0);
    if (t.povm.size() != n || t.povm.dim() != d) {
      throw DimensionError("convex_combination: outcome count or dimension mismatch");
    }
    total += t.weight;
  }
  if (std::abs(total - 1.0) > tol::kSum) {
    throw InvariantError("weights sum to one", std::abs(total - 1.0), tol::kSum);
  }
  EffectList out(n, Matrix::Zero(d, d));
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < n; ++i) out[i] += t.weight * t.povm.effect(i);
  }
  return Povm::from_effects(std::move(out), terms.front().povm.labels());
}

}  // namespace povmsim
