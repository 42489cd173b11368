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

#include "povmsim/two_qubit.h"

#include <cmath>
#include <numbers>

#include "povmsim/error.h"

namespace povmsim {

namespace {

constexpr double kResidualLimit = 1e-8;
constexpr double kDiagonalLimit = 1e-9;

const Complex kI(0.0, 1.0);

Matrix magic_basis() {
  Matrix b(4, 4);
  b << 1, 0, 0, kI,
       0, kI, 1, 0,
       0, kI, -1, 0,
       1, 0, 0, -kI;
  return b / std::sqrt(2.0);
}

double off_diagonal(const Matrix& m) {
  double worst = 0.0;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

bool near_identity(const Matrix& u) {
  return phase_insensitive_distance(u, Matrix::Identity(u.rows(), u.cols())) <= kResidualLimit;
}

void add_local(Circuit& circuit, const Matrix& u, int qubit) {
  if (!near_identity(u)) circuit.add(Su2Gate{u, qubit});
}

void add_cnot(Circuit& circuit, int control, int target, bool one_way) {
  if (one_way && control == 0) {
    circuit.add(HadamardGate{0});
    circuit.add(HadamardGate{1});
    circuit.add(CnotGate{1, 0});
    circuit.add(HadamardGate{0});
    circuit.add(HadamardGate{1});
  } else {
    circuit.add(CnotGate{control, target});
  }
}

}  // namespace

double phase_insensitive_distance(const Matrix& u, const Matrix& v) {
  const Complex overlap = (v.adjoint() * u).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (u - phase * v).cwiseAbs().maxCoeff();
}

KronFactors kron_factor(const Matrix& w) {
  if (w.rows() != 4 || w.cols() != 4) throw DimensionError("kron_factor: expected a 4x4 matrix");
  // R[(i1 j1), (i2 j2)] = W[2 i1 + i2, 2 j1 + j2] has rank one for products.
  Matrix r(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = w(2 * i1 + i2, 2 * j1 + j2);
  const Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s = std::sqrt(svd.singularValues()(0));
  Matrix a(2, 2);
  Matrix b(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = svd.matrixU()(2 * i + j, 0) * s;
      b(i, j) = std::conj(svd.matrixV()(2 * i + j, 0)) * s;
    }
  }
  const Complex root = std::sqrt(a.determinant());
  a /= root;
  b *= root;
  return {a, b, (w - kron(a, b)).cwiseAbs().maxCoeff()};
}

KakDecomposition kak_decomposition(const Matrix& u_in) {
  if (u_in.rows() != 4 || u_in.cols() != 4) throw DimensionError("kak_decomposition: expected a 4x4 unitary");
  const Matrix u = u_in / std::pow(u_in.determinant(), 0.25);
  const Matrix b = magic_basis();
  const Matrix up = b.adjoint() * u * b;
  const Matrix m = up.transpose() * up;

  // Re(M) and Im(M) are commuting real symmetric matrices; a generic real
  // combination shares their eigenbasis.
  Eigen::MatrixXd p;
  Matrix diag;
  bool found = false;
  for (double r : {0.7071, 1.3, 2.9, 0.11}) {
    const Eigen::MatrixXd mix = m.real() + r * m.imag();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (mix + mix.transpose()));
    p = eig.eigenvectors();
    diag = p.transpose().cast<Complex>() * m * p.cast<Complex>();
    if (off_diagonal(diag) < kDiagonalLimit) {
      found = true;
      break;
    }
  }
  if (!found) throw InvariantError("simultaneous diagonalization", off_diagonal(diag), kDiagonalLimit);
  if (p.determinant() < 0) {
    p.col(0) *= -1.0;
    diag = p.transpose().cast<Complex>() * m * p.cast<Complex>();
  }

  Vector f(4);
  for (int k = 0; k < 4; ++k) f(k) = std::sqrt(diag(k, k));
  auto left = [&] { return Matrix(up * p.cast<Complex>() * f.cwiseInverse().asDiagonal()); };
  Matrix k1 = left();
  if (k1.determinant().real() < 0) {
    f(0) = -f(0);
    k1 = left();
  }

  const Matrix l1 = b * k1 * b.adjoint();
  const Matrix l2 = b * p.transpose().cast<Complex>() * b.adjoint();

  // angle(f_k) = a xx_k + b yy_k + c zz_k + g with xx = diag(B^dag XX B) etc.
  const Matrix xx = b.adjoint() * kron(pauli_x(), pauli_x()) * b;
  const Matrix yy = b.adjoint() * kron(pauli_y(), pauli_y()) * b;
  const Matrix zz = b.adjoint() * kron(pauli_z(), pauli_z()) * b;
  Eigen::Matrix4d lhs;
  Eigen::Vector4d rhs;
  for (int k = 0; k < 4; ++k) {
    lhs.row(k) << xx(k, k).real(), yy(k, k).real(), zz(k, k).real(), 1.0;
    rhs(k) = std::arg(f(k));
  }
  const Eigen::Vector4d sol = lhs.partialPivLu().solve(rhs);

  const KronFactors first = kron_factor(l1);
  const KronFactors second = kron_factor(l2);
  return {first.a, first.b, second.a, second.b, {sol(0), sol(1), sol(2)}, sol(3)};
}

Circuit decompose_two_qubit(const Matrix& u, bool one_way) {
  Circuit circuit(2);
  const KronFactors local = kron_factor(u);
  if (local.residual <= kResidualLimit) {
    add_local(circuit, local.a, 0);
    add_local(circuit, local.b, 1);
  } else {
    const KakDecomposition kak = kak_decomposition(u);
    const auto [a, b, c] = kak.coefficients;
    const double half_pi = std::numbers::pi / 2;

    // exp(i(a XX + b YY + c ZZ)) in three CNOTs, with the outer Rz merged
    // into the neighbouring local layers.
    add_local(circuit, kak.a2, 0);
    add_local(circuit, rz(-half_pi) * kak.b2, 1);
    add_cnot(circuit, 1, 0, one_way);
    circuit.add(Su2Gate{rz(half_pi - 2 * c), 0});
    circuit.add(Su2Gate{ry(2 * a - half_pi), 1});
    add_cnot(circuit, 0, 1, one_way);
    circuit.add(Su2Gate{ry(half_pi - 2 * b), 1});
    add_cnot(circuit, 1, 0, one_way);
    add_local(circuit, kak.a1 * rz(half_pi), 0);
    add_local(circuit, kak.b1, 1);
  }
  const double residual = phase_insensitive_distance(u, circuit.unitary());
  if (residual > kResidualLimit) throw InvariantError("decomposition residual", residual, kResidualLimit);
  return circuit;
}

}  // namespace povmsim
