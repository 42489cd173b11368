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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "povmsim/povm.h"

namespace povmsim {

/// Pure states |psi_i> in C^D with prior probabilities p_i.
class Ensemble {
 public:
  static Ensemble from_states(std::vector<Vector> states, std::vector<double> probs);
  static Ensemble uniform(std::vector<Vector> states);

  Index dim() const { return psi_.rows(); }
  std::size_t size() const { return probs_.size(); }
  /// D x n matrix whose columns are the states.
  const Matrix& state_matrix() const { return psi_; }
  Vector state(std::size_t i) const { return psi_.col(static_cast<Index>(i)); }
  const std::vector<double>& probs() const { return probs_; }
  bool is_uniform() const;

  /// Smallest singular value of the state matrix.
  double smallest_singular_value() const { return sigma_min_; }
  /// sigma_min > tol::kLinearIndependence * sigma_max.
  bool linearly_independent() const { return independent_; }

 private:
  Ensemble(Matrix psi, std::vector<double> probs);

  Matrix psi_;
  std::vector<double> probs_;
  double sigma_min_ = 0.0;
  bool independent_ = false;
};

/// C_ij = <psi_i|psi_j>.
Matrix gram_matrix(const Ensemble& ensemble);

struct UsdViolation {
  std::size_t state;
  std::size_t outcome;
  double value;  // tr(rho_state M_outcome)
};

struct UsdReport {
  double success = 0.0;
  std::vector<UsdViolation> violations;  // cross terms above tol::kUnambiguous

  bool unambiguous() const { return violations.empty(); }
};

/// sum_i p_i tr(rho_i M_i) for an (n+1)-outcome POVM whose last effect is
/// inconclusive.
UsdReport usd_success(const Ensemble& ensemble, const Povm& povm);

struct DualBasis {
  Matrix vectors;           // D x n, <dual_i|psi_j> = delta_ij
  double condition_number;  // of the Gram matrix
};

/// Dual vectors Psi C^{-1}, obtained by a Cholesky solve against C.
DualBasis dual_vectors(const Ensemble& ensemble);

/// lambda_min(C) |dual_i><dual_i| for each state, plus the inconclusive
/// effect. Requires a linearly independent, uniform ensemble.
Povm equal_probability_measurement(const Ensemble& ensemble);

/// Best USD success over randomized projective measurements with
/// post-processing: max_i p_i / (C^{-1})_ii. Requires linearly independent,
/// pairwise non-orthogonal states.
double projective_simulable_optimum(const Ensemble& ensemble);

struct SymmetricEnsemble {
  Ensemble ensemble;
  double optimum;  // exact USD optimum, min_k |c_k|^2
};

/// |phi_i> = d^{-1/2} sum_k c_k w^{ik} |k> with sum_k |c_k|^2 = d. The
/// Gram matrix is circulant with eigenvalues |c_k|^2.
SymmetricEnsemble symmetric_ensemble(Index d, const std::vector<Complex>& c);

/// |c_0|^2 = 1 - eps and the remaining weight spread evenly, so the optimum
/// is 1 - eps. Requires eps in (0, 1) and d >= 2.
SymmetricEnsemble symmetric_ensemble_with_gap(Index d, double eps);

struct AdvantageBound {
  double p_povm_lower;  // equal-probability success, lambda_min(C)
  double p_glued;       // lambda_min(C) / d, attainable with postselection
  double p_sp;          // exact projective-simulable optimum
  double ratio;         // p_povm_lower / p_sp
  bool bound_ok;        // p_povm_lower <= d * p_sp + tol::kSum
};

/// Checks that the POVM advantage for USD is at most a factor d. An
/// orthonormal ensemble has p_sp = 1; other ensembles with orthogonal pairs
/// are rejected.
AdvantageBound povm_advantage_bound(const Ensemble& ensemble);

struct RandomTrial {
  std::size_t trial;
  std::uint64_t seed;
  double lambda_min;
  double p_sp_upper;   // 1/d
  double ratio_lower;  // d * lambda_min
  double ratio_upper;  // d
  bool band_ok;        // d (1 - gamma)^2 <= ratio_lower <= d
};

struct RandomExperiment {
  Index d;
  Index big_d;
  double gamma;  // d / D
  std::uint64_t seed;
  std::vector<RandomTrial> trials;
  double mean_lambda_min;
  double std_lambda_min;
  double predicted;  // (1 - gamma)^2
  bool band_ok_all;
};

/// Gram spectra of d Haar-random states in C^D. Trial t uses the sub-seed
/// Rng::derive(seed, t), so results do not depend on `threads`.
RandomExperiment random_ensemble_experiment(Index d, Index big_d, std::size_t trials,
                                            std::uint64_t seed, unsigned threads = 1);

/// Columns d, D, gamma, trial, lambda_min, p_sp_upper, ratio_lower,
/// ratio_upper, seed.
void write_random_experiment_csv(std::ostream& out, const RandomExperiment& experiment);

}  // namespace povmsim
