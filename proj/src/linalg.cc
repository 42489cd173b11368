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

#include "povmsim/linalg.h"

#include <algorithm>
#include <cmath>

#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

bool all_finite(const Matrix& m) {
  for (Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!all_finite(m)) throw Error(std::string(what) + ": non-finite entries");
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw DimensionError("max_abs_diff: list length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, max_abs_diff(a[i], b[i]));
  return worst;
}

HermitianEigen hermitian_eigen(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw Error("hermitian_eigen: eigen-solve failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double operator_norm(const Matrix& m) {
  if (!all_finite(m)) throw Error("operator_norm: non-finite entries");
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() &&
      hermiticity_defect(m) <= tol::scaled(tol::kHermitian, m.rows())) {
    const Eigen::VectorXd ev = hermitian_eigen(m).values;
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double min_eigenvalue(const Matrix& m) {
  require_square(m, "min_eigenvalue");
  const double defect = hermiticity_defect(m);
  const double limit = tol::scaled(tol::kHermitian, m.rows());
  if (defect > limit) throw InvariantError("hermitian", defect, limit);
  return hermitian_eigen(m).values(0);
}

Matrix outer(const Vector& u, const Vector& v) { return u * v.adjoint(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix inverse_sqrt_psd(const Matrix& a) {
  const HermitianEigen eig = hermitian_eigen(a);
  if (eig.values(0) <= 0.0) {
    throw PreconditionError("inverse_sqrt_psd: matrix is not positive definite");
  }
  const Eigen::VectorXd scale = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * scale.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace povmsim
