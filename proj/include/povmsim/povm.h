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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "povmsim/linalg.h"

namespace povmsim {

/// Operator lists that are not required to form a POVM: tomographic
/// reconstructions, printed matrices with rounded entries, and so on.
using EffectList = std::vector<Matrix>;

/// A Hermitian operator with spectrum in [0, 1] (within tolerance).
class Effect {
 public:
  static Effect from_matrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

 private:
  explicit Effect(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// An ordered list of effects summing to the identity.
class Povm {
 public:
  /// Validates every effect and completeness. Labels default to "1".."n".
  static Povm from_effects(std::vector<Matrix> effects, std::vector<std::string> labels = {});

  static Povm trivial(Index dim);
  static Povm computational_basis(Index dim);

  Index dim() const { return effects_.front().dim(); }
  std::size_t size() const { return effects_.size(); }
  const Matrix& effect(std::size_t i) const { return effects_[i].matrix(); }
  const std::vector<Effect>& effects() const { return effects_; }
  const std::vector<std::string>& labels() const { return labels_; }

  EffectList matrices() const;
  /// max |sum_i M_i - 1| entrywise.
  double completeness_defect() const;

 private:
  Povm(std::vector<Effect> effects, std::vector<std::string> labels)
      : effects_(std::move(effects)), labels_(std::move(labels)) {}

  std::vector<Effect> effects_;
  std::vector<std::string> labels_;
};

/// A POVM whose effects are pairwise orthogonal projectors. Null effects
/// are allowed.
class ProjectiveMeasurement {
 public:
  static ProjectiveMeasurement from_povm(Povm povm);

  const Povm& povm() const { return povm_; }

 private:
  explicit ProjectiveMeasurement(Povm povm) : povm_(std::move(povm)) {}
  Povm povm_;
};

/// Qubit effect written as (alpha/2)(1 + n.sigma).
struct BlochVector {
  double alpha = 0.0;
  std::array<double, 3> n{};

  static BlochVector from_matrix(const Matrix& m);
  Matrix to_matrix() const;
  double length() const;
  /// True when to_matrix() is a valid effect (within tol::kPsd).
  bool is_physical() const;
};

/// Completeness defect of an arbitrary list, max |sum - 1| entrywise.
double completeness_defect(const EffectList& effects);

/// weight * |vector><vector|; a zero effect has weight 0.
struct RankOneForm {
  double weight;
  Vector vector;
};

/// The rank-one form of a PSD matrix, or nullopt if its second eigenvalue
/// exceeds tol::kPsd.
std::optional<RankOneForm> rank_one_form(const Matrix& effect);

}  // namespace povmsim
