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

#include "povmsim/naimark.h"

#include <algorithm>
#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

namespace {

bool is_power_of_two(Index x) { return x > 0 && (x & (x - 1)) == 0; }

Index next_power_of_two(Index x) {
  Index p = 1;
  while (p < x) p <<= 1;
  return p;
}

// Fills the columns of `u` not listed in `taken` with an orthonormal basis
// of the complement of the taken columns. Standard basis vectors are used
// in order of largest residual (ties to lowest index), Gram-Schmidt applied
// twice.
void complete_unitary(Matrix& u, const std::vector<bool>& taken) {
  const Index n = u.rows();
  std::vector<Vector> basis;
  for (Index c = 0; c < n; ++c) {
    if (taken[static_cast<std::size_t>(c)]) basis.push_back(u.col(c));
  }
  auto residual = [&](Vector v) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b * b.dot(v);
    }
    return v;
  };
  for (Index c = 0; c < n; ++c) {
    if (taken[static_cast<std::size_t>(c)]) continue;
    Vector best;
    double best_norm = -1.0;
    for (Index k = 0; k < n; ++k) {
      Vector r = residual(Vector::Unit(n, k));
      const double norm = r.norm();
      if (norm > best_norm + 1e-12) {
        best_norm = norm;
        best = std::move(r);
      }
    }
    best /= best_norm;
    basis.push_back(best);
    u.col(c) = best;
  }
}

}  // namespace

Matrix NaimarkDilation::embedding_matrix() const {
  Matrix e = Matrix::Zero(ext_dim(), source.dim());
  for (std::size_t k = 0; k < embedding.size(); ++k) e(embedding[k], static_cast<Index>(k)) = 1.0;
  return e;
}

Matrix NaimarkDilation::isometry() const { return unitary * embedding_matrix(); }

NaimarkDilation naimark_dilation(const Povm& povm, DilationMode mode) {
  const Index d = povm.dim();
  const auto n = static_cast<Index>(povm.size());
  if (n < d) throw PreconditionError("naimark_dilation: fewer outcomes than the dimension");

  Index ext = n;
  if (mode == DilationMode::kQubitRegister) {
    if (!is_power_of_two(d)) {
      throw PreconditionError("naimark_dilation: qubit register mode needs a power-of-two dimension");
    }
    ext = next_power_of_two(n);
  }

  Matrix v = Matrix::Zero(ext, d);
  for (Index i = 0; i < n; ++i) {
    const auto form = rank_one_form(povm.effect(static_cast<std::size_t>(i)));
    if (!form) {
      throw PreconditionError("naimark_dilation: effect " + std::to_string(i + 1) + " is not rank one");
    }
    v.row(i) = std::sqrt(form->weight) * form->vector.adjoint();
  }
  const double iso = max_abs_diff(v.adjoint() * v, Matrix::Identity(d, d));
  if (iso > tol::scaled(tol::kSum, d)) throw InvariantError("isometry", iso, tol::scaled(tol::kSum, d));

  const Index stride = mode == DilationMode::kQubitRegister ? ext / d : 1;
  std::vector<Index> embedding;
  Matrix u = Matrix::Zero(ext, ext);
  std::vector<bool> taken(static_cast<std::size_t>(ext), false);
  for (Index k = 0; k < d; ++k) {
    embedding.push_back(k * stride);
    u.col(k * stride) = v.col(k);
    taken[static_cast<std::size_t>(k * stride)] = true;
  }
  complete_unitary(u, taken);

  const double unit = max_abs_diff(u.adjoint() * u, Matrix::Identity(ext, ext));
  if (unit > tol::scaled(tol::kSum, ext)) throw InvariantError("unitarity", unit, tol::scaled(tol::kSum, ext));
  return {povm, mode, std::move(u), std::move(embedding)};
}

QuantumState embed_state(const NaimarkDilation& dilation, const QuantumState& state) {
  if (state.dim() != dilation.source.dim()) {
    throw DimensionError("embed_state: state dimension does not match the dilation");
  }
  const Matrix e = dilation.embedding_matrix();
  if (state.is_pure_form()) return QuantumState::pure(e * state.vector());
  return QuantumState::density(e * state.density_matrix() * e.adjoint());
}

std::vector<double> dilated_statistics(const NaimarkDilation& dilation, const QuantumState& state) {
  if (state.dim() != dilation.source.dim()) {
    throw DimensionError("dilated_statistics: state dimension does not match the dilation");
  }
  const Matrix w = dilation.isometry();
  const Matrix out = w * state.density_matrix() * w.adjoint();
  std::vector<double> p(static_cast<std::size_t>(out.rows()));
  for (Index j = 0; j < out.rows(); ++j) p[static_cast<std::size_t>(j)] = std::max(0.0, out(j, j).real());
  return p;
}

}  // namespace povmsim
