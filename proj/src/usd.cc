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

#include "povmsim/usd.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <ostream>
#include <thread>

#include "povmsim/error.h"
#include "povmsim/random.h"
#include "povmsim/tolerance.h"

namespace povmsim {

Ensemble::Ensemble(Matrix psi, std::vector<double> probs) : psi_(std::move(psi)), probs_(std::move(probs)) {
  const Eigen::JacobiSVD<Matrix> svd(psi_);
  const auto& s = svd.singularValues();
  sigma_min_ = psi_.cols() > psi_.rows() ? 0.0 : s(s.size() - 1);
  independent_ = sigma_min_ > tol::kLinearIndependence * s(0);
}

Ensemble Ensemble::from_states(std::vector<Vector> states, std::vector<double> probs) {
  if (states.empty()) throw DimensionError("Ensemble: no states");
  if (states.size() != probs.size()) throw DimensionError("Ensemble: states and probs differ in length");
  const Index dim = states.front().size();
  Matrix psi(dim, static_cast<Index>(states.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != dim) throw DimensionError("Ensemble: states of different dimension");
    const double norm_defect = std::abs(states[i].norm() - 1.0);
    if (norm_defect > tol::kNorm) throw InvariantError("state normalization", norm_defect, tol::kNorm);
    if (!(probs[i] >= 0.0)) throw InvariantError("probability non-negativity", -probs[i], 0.0);
    psi.col(static_cast<Index>(i)) = states[i].normalized();
    total += probs[i];
  }
  if (std::abs(total - 1.0) > tol::kSum) throw InvariantError("probability normalization", std::abs(total - 1.0), tol::kSum);
  return Ensemble(std::move(psi), std::move(probs));
}

Ensemble Ensemble::uniform(std::vector<Vector> states) {
  const std::size_t n = states.size();
  return from_states(std::move(states), std::vector<double>(n, 1.0 / static_cast<double>(std::max<std::size_t>(n, 1))));
}

bool Ensemble::is_uniform() const {
  const double u = 1.0 / static_cast<double>(size());
  return std::all_of(probs_.begin(), probs_.end(), [u](double p) { return std::abs(p - u) <= tol::kSum; });
}

Matrix gram_matrix(const Ensemble& ensemble) {
  const Matrix& psi = ensemble.state_matrix();
  return psi.adjoint() * psi;
}

UsdReport usd_success(const Ensemble& ensemble, const Povm& povm) {
  if (povm.size() != ensemble.size() + 1) {
    throw DimensionError("usd_success: POVM needs one outcome per state plus an inconclusive one");
  }
  if (povm.dim() != ensemble.dim()) throw DimensionError("usd_success: dimension mismatch");
  UsdReport report;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const Vector psi = ensemble.state(i);
    for (std::size_t j = 0; j < ensemble.size(); ++j) {
      const double value = (psi.adjoint() * povm.effect(j) * psi)(0, 0).real();
      if (i == j) {
        report.success += ensemble.probs()[i] * value;
      } else if (std::abs(value) > tol::kUnambiguous) {
        report.violations.push_back({i, j, value});
      }
    }
  }
  return report;
}

DualBasis dual_vectors(const Ensemble& ensemble) {
  if (!ensemble.linearly_independent()) {
    throw PreconditionError("dual_vectors: states are linearly dependent (smallest singular value " +
                            std::to_string(ensemble.smallest_singular_value()) + ")");
  }
  const Matrix c = gram_matrix(ensemble);
  const Eigen::LLT<Matrix> llt(c);
  if (llt.info() != Eigen::Success) throw PreconditionError("dual_vectors: Gram matrix is not positive definite");
  const Matrix y = llt.solve(Matrix(ensemble.state_matrix().adjoint()));
  const HermitianEigen eig = hermitian_eigen(c);
  return {y.adjoint(), eig.values(eig.values.size() - 1) / eig.values(0)};
}

Povm equal_probability_measurement(const Ensemble& ensemble) {
  if (!ensemble.is_uniform()) throw PreconditionError("equal_probability_measurement: probabilities must be uniform");
  const DualBasis dual = dual_vectors(ensemble);
  const double lambda = min_eigenvalue(gram_matrix(ensemble));
  const Index dim = ensemble.dim();
  EffectList effects;
  std::vector<std::string> labels;
  Matrix rest = Matrix::Identity(dim, dim);
  for (Index i = 0; i < dual.vectors.cols(); ++i) {
    effects.push_back(lambda * projector(dual.vectors.col(i)));
    rest -= effects.back();
    labels.push_back(std::to_string(i + 1));
  }
  effects.push_back(0.5 * (rest + rest.adjoint()));
  labels.push_back("inconclusive");
  return Povm::from_effects(std::move(effects), std::move(labels));
}

namespace {

void require_pairwise_nonorthogonal(const Matrix& c) {
  for (Index i = 0; i < c.rows(); ++i) {
    for (Index j = i + 1; j < c.cols(); ++j) {
      if (std::abs(c(i, j)) <= tol::kOrthogonal) {
        throw PreconditionError("states " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are orthogonal (overlap " + std::to_string(std::abs(c(i, j))) + ")");
      }
    }
  }
}

}  // namespace

double projective_simulable_optimum(const Ensemble& ensemble) {
  if (!ensemble.linearly_independent()) {
    throw PreconditionError("projective_simulable_optimum: states are linearly dependent");
  }
  const Matrix c = gram_matrix(ensemble);
  require_pairwise_nonorthogonal(c);
  const Eigen::LLT<Matrix> llt(c);
  const Matrix inv = llt.solve(Matrix::Identity(c.rows(), c.cols()));
  double best = 0.0;
  for (Index i = 0; i < c.rows(); ++i) {
    best = std::max(best, ensemble.probs()[static_cast<std::size_t>(i)] / inv(i, i).real());
  }
  return best;
}

SymmetricEnsemble symmetric_ensemble(Index d, const std::vector<Complex>& c) {
  if (d < 1 || static_cast<Index>(c.size()) != d) throw DimensionError("symmetric_ensemble: need d coefficients");
  double total = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (const Complex& ck : c) {
    total += std::norm(ck);
    smallest = std::min(smallest, std::norm(ck));
  }
  const double dd = static_cast<double>(d);
  if (std::abs(total - dd) > tol::scaled(tol::kSum, d)) {
    throw InvariantError("coefficient normalization sum |c_k|^2 = d", std::abs(total - dd), tol::scaled(tol::kSum, d));
  }
  if (smallest <= tol::kLinearIndependence) throw PreconditionError("symmetric_ensemble: zero coefficient");

  // Absorb the admissible normalization slack so the states are unit norm
  // to round-off.
  const double rescale = std::sqrt(dd / total);
  smallest *= rescale * rescale;
  std::vector<Vector> states;
  for (Index i = 0; i < d; ++i) {
    Vector phi(d);
    for (Index k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * k) % d) / dd;
      phi(k) = rescale * c[static_cast<std::size_t>(k)] * std::polar(1.0, angle) / std::sqrt(dd);
    }
    states.push_back(std::move(phi));
  }
  return {Ensemble::uniform(std::move(states)), smallest};
}

SymmetricEnsemble symmetric_ensemble_with_gap(Index d, double eps) {
  if (d < 2) throw PreconditionError("symmetric_ensemble_with_gap: d must be at least 2");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw PreconditionError("symmetric_ensemble_with_gap: eps must lie in (0, 1) for non-orthogonal states");
  }
  std::vector<Complex> c(static_cast<std::size_t>(d), std::sqrt(1.0 + eps / static_cast<double>(d - 1)));
  c[0] = std::sqrt(1.0 - eps);
  return symmetric_ensemble(d, c);
}

AdvantageBound povm_advantage_bound(const Ensemble& ensemble) {
  if (!ensemble.linearly_independent()) throw PreconditionError("povm_advantage_bound: states are linearly dependent");
  const Matrix c = gram_matrix(ensemble);
  const auto d = static_cast<double>(ensemble.size());
  const double lambda = min_eigenvalue(c);
  const bool orthonormal = max_abs_diff(c, Matrix::Identity(c.rows(), c.cols())) <= tol::kOrthogonal;
  const double p_sp = orthonormal ? 1.0 : projective_simulable_optimum(ensemble);
  return {lambda, lambda / d, p_sp, lambda / p_sp, lambda <= d * p_sp + tol::kSum};
}

RandomExperiment random_ensemble_experiment(Index d, Index big_d, std::size_t trials, std::uint64_t seed,
                                            unsigned threads) {
  if (d < 1 || big_d < 1) throw DimensionError("random_ensemble_experiment: dimensions must be positive");
  if (d > big_d) throw PreconditionError("random_ensemble_experiment: need d <= D");
  if (trials < 1) throw PreconditionError("random_ensemble_experiment: need at least one trial");

  RandomExperiment ex;
  ex.d = d;
  ex.big_d = big_d;
  ex.gamma = static_cast<double>(d) / static_cast<double>(big_d);
  ex.seed = seed;
  ex.predicted = (1.0 - ex.gamma) * (1.0 - ex.gamma);
  ex.trials.resize(trials);
  const auto dd = static_cast<double>(d);

  auto run = [&](std::size_t t) {
    const std::uint64_t sub = Rng::derive(seed, t);
    Rng rng(sub);
    Matrix psi(big_d, d);
    for (Index i = 0; i < d; ++i) psi.col(i) = haar_random_vector(big_d, rng);
    const double lambda = min_eigenvalue(psi.adjoint() * psi);
    const double lower = dd * lambda;
    ex.trials[t] = {t, sub, lambda, 1.0 / dd, lower, dd,
                    dd * ex.predicted <= lower + tol::kSum && lower <= dd + tol::kSum};
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) run(t);
      });
    }
  }

  double sum = 0.0;
  for (const auto& t : ex.trials) sum += t.lambda_min;
  ex.mean_lambda_min = sum / static_cast<double>(trials);
  double var = 0.0;
  for (const auto& t : ex.trials) var += (t.lambda_min - ex.mean_lambda_min) * (t.lambda_min - ex.mean_lambda_min);
  ex.std_lambda_min = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1)) : 0.0;
  ex.band_ok_all = std::all_of(ex.trials.begin(), ex.trials.end(), [](const RandomTrial& t) { return t.band_ok; });
  return ex;
}

void write_random_experiment_csv(std::ostream& out, const RandomExperiment& ex) {
  out << "d,D,gamma,trial,lambda_min,p_sp_upper,ratio_lower,ratio_upper,seed\n";
  out.precision(17);
  for (const auto& t : ex.trials) {
    out << ex.d << ',' << ex.big_d << ',' << ex.gamma << ',' << t.trial << ',' << t.lambda_min << ','
        << t.p_sp_upper << ',' << t.ratio_lower << ',' << t.ratio_upper << ',' << t.seed << '\n';
  }
}

}  // namespace povmsim
