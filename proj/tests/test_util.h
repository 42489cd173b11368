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

// Independent reference computations shared by the tests. They use plain
// loops or different Eigen solvers from the library code on purpose.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "povmsim/linalg.h"
#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim::testing {

// tr(M rho) by explicit double sum.
inline double trace_product(const Matrix& m, const Matrix& rho) {
  Complex t = 0.0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) t += m(i, j) * rho(j, i);
  return t.real();
}

inline std::vector<double> born_oracle(const Matrix& rho, const EffectList& effects) {
  std::vector<double> p;
  for (const auto& e : effects) p.push_back(trace_product(e, rho));
  return p;
}

// Smallest eigenvalue via the general complex solver.
inline double min_eig_oracle(const Matrix& m) {
  const Eigen::ComplexEigenSolver<Matrix> es(m);
  double lo = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < es.eigenvalues().size(); ++i) lo = std::min(lo, es.eigenvalues()(i).real());
  return lo;
}

// Spectral norm via SVD.
inline double norm_oracle(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

// Plain enumeration of all non-empty outcome subsets.
inline double distance_oracle(const EffectList& a, const EffectList& b) {
  const std::size_t k = std::max(a.size(), b.size());
  const Index d = a.front().rows();
  double best = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Matrix s = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (i < a.size()) s += a[i];
      if (i < b.size()) s -= b[i];
    }
    best = std::max(best, norm_oracle(s));
  }
  return best;
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double max_entry_diff(const EffectList& a, const EffectList& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const Matrix& x = i < a.size() ? a[i] : b[i] * 0.0;
    const Matrix& y = i < b.size() ? b[i] : a[i] * 0.0;
    worst = std::max(worst, max_entry_diff(x, y));
  }
  return worst;
}

inline Matrix ket_bra(const Vector& v) { return v * v.adjoint(); }

inline Vector qubit(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace povmsim::testing
