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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace povmsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Spectral decomposition of a Hermitian matrix; eigenvalues ascending.
struct HermitianEigen {
  Eigen::VectorXd values;
  Matrix vectors;
};

bool all_finite(const Matrix& m);
void require_square(const Matrix& m, const char* what);

/// max |A - A^dagger| entrywise.
double hermiticity_defect(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Eigen-solve of the Hermitian part (A + A^dagger)/2.
HermitianEigen hermitian_eigen(const Matrix& m);

/// Largest singular value. For Hermitian input this is the largest
/// absolute eigenvalue and is computed through the symmetric solver.
double operator_norm(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix. Throws InvariantError when
/// the input is not Hermitian within tolerance.
double min_eigenvalue(const Matrix& m);

Matrix outer(const Vector& u, const Vector& v);
inline Matrix projector(const Vector& v) { return outer(v, v); }
Matrix kron(const Matrix& a, const Matrix& b);

/// A^{-1/2} for a positive definite Hermitian A.
Matrix inverse_sqrt_psd(const Matrix& a);

/// Pauli matrices in the computational basis.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Entrywise max over a list of same-shape matrices.
double max_abs_diff(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

}  // namespace povmsim
