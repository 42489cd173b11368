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

#include "povmsim/random.h"

#include <cmath>

#include "povmsim/error.h"

namespace povmsim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Complex Rng::complex_normal() {
  const double s = 1.0 / std::sqrt(2.0);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

Vector haar_random_vector(Index dim, Rng& rng) {
  if (dim < 1) throw DimensionError("haar_random_vector: dim < 1");
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

QuantumState haar_random_pure_state(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return QuantumState::pure(haar_random_vector(dim, rng));
}

Matrix haar_random_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw DimensionError("haar_random_unitary: dim < 1");
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex phase = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

Povm random_rank_one_povm(Index dim, std::size_t outcomes, Rng& rng) {
  const Index n = static_cast<Index>(outcomes);
  if (n < dim) throw PreconditionError("random_rank_one_povm: need outcomes >= dim");
  const Matrix u = haar_random_unitary(n, rng);
  std::vector<Matrix> effects;
  effects.reserve(outcomes);
  for (Index i = 0; i < n; ++i) {
    // Rows of the top dim x n block form an isometry, so the columns give
    // a resolution of the identity.
    const Vector v = u.block(0, i, dim, 1);
    effects.push_back(projector(v));
  }
  return Povm::from_effects(std::move(effects));
}

Povm random_povm(Index dim, std::size_t outcomes, Rng& rng) {
  if (outcomes < 1) throw PreconditionError("random_povm: need at least one outcome");
  std::vector<Matrix> g;
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes; ++i) {
    Matrix a(dim, dim);
    for (Index c = 0; c < dim; ++c) {
      for (Index r = 0; r < dim; ++r) a(r, c) = rng.complex_normal();
    }
    g.push_back(a * a.adjoint());
    sum += g.back();
  }
  const Matrix s = inverse_sqrt_psd(sum);
  std::vector<Matrix> effects;
  for (auto& m : g) {
    Matrix e = s * m * s;
    effects.push_back(0.5 * (e + e.adjoint()));
  }
  return Povm::from_effects(std::move(effects));
}

}  // namespace povmsim
