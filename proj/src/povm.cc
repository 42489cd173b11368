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

#include "povmsim/povm.h"

#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

Effect Effect::from_matrix(Matrix m) {
  require_square(m, "Effect");
  const Index d = m.rows();
  const double herm = hermiticity_defect(m);
  const double herm_tol = tol::scaled(tol::kHermitian, d);
  if (herm > herm_tol) throw InvariantError("effect hermitian", herm, herm_tol);
  const Eigen::VectorXd ev = hermitian_eigen(m).values;
  const double psd_tol = tol::scaled(tol::kPsd, d);
  if (ev(0) < -psd_tol) throw InvariantError("effect positive semidefinite", -ev(0), psd_tol);
  if (ev(d - 1) > 1.0 + psd_tol) {
    throw InvariantError("effect bounded by identity", ev(d - 1) - 1.0, psd_tol);
  }
  return Effect(std::move(m));
}

double completeness_defect(const EffectList& effects) {
  if (effects.empty()) throw DimensionError("completeness_defect: empty list");
  const Index d = effects.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : effects) {
    if (e.rows() != d || e.cols() != d) throw DimensionError("completeness_defect: mixed dimensions");
    sum += e;
  }
  return max_abs_diff(sum, Matrix::Identity(d, d));
}

std::optional<RankOneForm> rank_one_form(const Matrix& effect) {
  const Index d = effect.rows();
  const HermitianEigen eig = hermitian_eigen(effect);
  const double limit = tol::scaled(tol::kPsd, d);
  if (d > 1 && eig.values(d - 2) > limit) return std::nullopt;
  const double top = eig.values(d - 1);
  if (top <= limit) return RankOneForm{0.0, Vector::Unit(d, 0)};
  return RankOneForm{top, eig.vectors.col(d - 1)};
}

Povm Povm::from_effects(std::vector<Matrix> effects, std::vector<std::string> labels) {
  if (effects.empty()) throw DimensionError("Povm: no effects");
  const Index d = effects.front().rows();
  std::vector<Effect> checked;
  checked.reserve(effects.size());
  for (auto& m : effects) {
    if (m.rows() != d || m.cols() != d) throw DimensionError("Povm: effects of different dimension");
    checked.push_back(Effect::from_matrix(std::move(m)));
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : checked) sum += e.matrix();
  const double defect = max_abs_diff(sum, Matrix::Identity(d, d));
  const double limit = tol::scaled(tol::kSum, d);
  if (defect > limit) throw InvariantError("completeness", defect, limit);

  if (labels.empty()) {
    for (std::size_t i = 0; i < checked.size(); ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != checked.size()) throw DimensionError("Povm: label count != effect count");
  return Povm(std::move(checked), std::move(labels));
}

Povm Povm::trivial(Index dim) { return from_effects({Matrix::Identity(dim, dim)}); }

Povm Povm::computational_basis(Index dim) {
  std::vector<Matrix> effects;
  for (Index k = 0; k < dim; ++k) {
    Matrix p = Matrix::Zero(dim, dim);
    p(k, k) = 1.0;
    effects.push_back(std::move(p));
  }
  return from_effects(std::move(effects));
}

EffectList Povm::matrices() const {
  EffectList out;
  out.reserve(effects_.size());
  for (const auto& e : effects_) out.push_back(e.matrix());
  return out;
}

double Povm::completeness_defect() const { return povmsim::completeness_defect(matrices()); }

ProjectiveMeasurement ProjectiveMeasurement::from_povm(Povm povm) {
  const Index d = povm.dim();
  const double limit = tol::scaled(tol::kProjector, d);
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const Matrix& p = povm.effect(i);
    const double idem = max_abs_diff(p * p, p);
    if (idem > limit) throw InvariantError("idempotent effect", idem, limit);
    for (std::size_t j = i + 1; j < povm.size(); ++j) {
      const double overlap = (p * povm.effect(j)).cwiseAbs().maxCoeff();
      if (overlap > limit) throw InvariantError("orthogonal effects", overlap, limit);
    }
  }
  return ProjectiveMeasurement(std::move(povm));
}

BlochVector BlochVector::from_matrix(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("BlochVector: qubit effects only");
  BlochVector b;
  b.alpha = m.trace().real();
  if (b.alpha <= 0.0) throw PreconditionError("BlochVector: effect has non-positive trace");
  b.n = {(m * pauli_x()).trace().real() / b.alpha, (m * pauli_y()).trace().real() / b.alpha,
         (m * pauli_z()).trace().real() / b.alpha};
  return b;
}

Matrix BlochVector::to_matrix() const {
  Matrix m = Matrix::Identity(2, 2) + n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
  return 0.5 * alpha * m;
}

double BlochVector::length() const { return std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]); }

bool BlochVector::is_physical() const {
  // Eigenvalues are (alpha/2)(1 +- |n|).
  const double r = length();
  const double lo = 0.5 * alpha * (1.0 - r);
  const double hi = 0.5 * alpha * (1.0 + r);
  const double eps = tol::scaled(tol::kPsd, 2);
  return lo >= -eps && hi <= 1.0 + eps;
}

}  // namespace povmsim
