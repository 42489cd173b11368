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

#include <span>
#include <vector>

#include <Eigen/Core>

#include "povmsim/povm.h"

namespace povmsim {

/// Classical post-processing q(j|k): row j is an output label, column k an
/// input label. Entries are non-negative and every column sums to one.
class PostProcessingMap {
 public:
  static PostProcessingMap from_matrix(Eigen::MatrixXd q);
  static PostProcessingMap identity(std::size_t n);
  /// Input k goes to output assignment[k] with probability one.
  static PostProcessingMap deterministic(std::size_t outputs, std::span<const std::size_t> assignment);
  /// Merges outcome `b` into outcome `a` (a < b) of an n-outcome
  /// measurement; later outcomes shift down by one.
  static PostProcessingMap glue(std::size_t n, std::size_t a, std::size_t b);

  std::size_t inputs() const { return static_cast<std::size_t>(q_.cols()); }
  std::size_t outputs() const { return static_cast<std::size_t>(q_.rows()); }
  double operator()(std::size_t j, std::size_t k) const { return q_(j, k); }
  const Eigen::MatrixXd& matrix() const { return q_; }

  /// `next` applied after this map.
  PostProcessingMap then(const PostProcessingMap& next) const;

 private:
  explicit PostProcessingMap(Eigen::MatrixXd q) : q_(std::move(q)) {}
  Eigen::MatrixXd q_;
};

/// N_j = sum_k q(j|k) M_k.
Povm apply_postprocessing(const Povm& povm, const PostProcessingMap& map);
EffectList apply_postprocessing(const EffectList& effects, const PostProcessingMap& map);

struct WeightedPovm {
  double weight;
  Povm povm;
};

/// Effectwise sum_t w_t M^t; the weights must form a probability vector.
Povm convex_combination(std::span<const WeightedPovm> terms);

}  // namespace povmsim
