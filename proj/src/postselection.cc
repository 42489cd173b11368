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

#include "povmsim/postselection.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "povmsim/born.h"
#include "povmsim/error.h"
#include "povmsim/random.h"
#include "povmsim/tolerance.h"

namespace povmsim {

namespace {

constexpr std::size_t kChunkShots = std::size_t{1} << 16;

// Draws `count` labels from a cumulative distribution into `out`.
void draw_from_cdf(const std::vector<double>& cdf, Rng& rng, std::span<std::uint32_t> out) {
  for (auto& o : out) {
    const double u = rng.uniform() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    o = static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                            static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  }
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  return cdf;
}

}  // namespace

RankOneRefinement rank_one_refinement(const Povm& povm) {
  const Index d = povm.dim();
  const double drop = tol::scaled(tol::kPsd, d);
  std::vector<RankOnePiece> pieces;
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const HermitianEigen eig = hermitian_eigen(povm.effect(i));
    for (Index k = d - 1; k >= 0; --k) {
      if (eig.values(k) <= drop) break;
      pieces.push_back({eig.values(k), eig.vectors.col(k), i});
    }
  }
  if (pieces.empty()) throw InvariantError("completeness", 1.0, tol::scaled(tol::kSum, d));

  Matrix sum = Matrix::Zero(d, d);
  for (const auto& p : pieces) sum += p.weight * projector(p.vector);
  const double defect = max_abs_diff(sum, Matrix::Identity(d, d));
  const double limit = tol::scaled(tol::kSum, d);
  if (defect > limit) throw InvariantError("completeness after refinement", defect, limit);
  if (defect > 0.0) {
    const Matrix s = inverse_sqrt_psd(sum);
    for (auto& p : pieces) {
      const Vector v = s * p.vector;
      const double norm = v.norm();
      p.weight *= norm * norm;
      p.vector = v / norm;
    }
  }

  std::vector<Matrix> effects;
  std::vector<std::string> labels;
  std::vector<std::size_t> parents;
  std::vector<std::size_t> rank_in_parent(povm.size(), 0);
  for (const auto& p : pieces) {
    effects.push_back(p.weight * projector(p.vector));
    labels.push_back(povm.labels()[p.parent] + "." + std::to_string(++rank_in_parent[p.parent]));
    parents.push_back(p.parent);
  }
  return {Povm::from_effects(std::move(effects), std::move(labels)), std::move(pieces),
          PostProcessingMap::deterministic(povm.size(), parents)};
}

Povm build_mq(const Povm& povm, double q) {
  if (!(q > 0.0 && q <= 1.0)) throw PreconditionError("build_mq: q must lie in (0, 1]");
  EffectList effects;
  for (std::size_t i = 0; i < povm.size(); ++i) effects.push_back(q * povm.effect(i));
  effects.push_back((1.0 - q) * Matrix::Identity(povm.dim(), povm.dim()));
  auto labels = povm.labels();
  labels.push_back("fail");
  return Povm::from_effects(std::move(effects), std::move(labels));
}

Povm ProjectiveSimulation::assemble() const {
  std::vector<WeightedPovm> terms;
  terms.reserve(components.size());
  for (const auto& c : components) terms.push_back({c.weight, c.measurement.povm()});
  return apply_postprocessing(convex_combination(terms), postprocessing);
}

PostselectionScheme::PostselectionScheme(Povm target, ProjectiveSimulation simulation,
                                         std::vector<BinaryComponent> components,
                                         double success_probability)
    : target_(std::move(target)),
      simulation_(std::move(simulation)),
      components_(std::move(components)),
      success_probability_(success_probability) {}

PostselectionScheme postselection_scheme(const Povm& povm) {
  const Index d = povm.dim();
  const std::size_t n = povm.size();
  RankOneRefinement refined = rank_one_refinement(povm);
  const std::size_t m = refined.pieces.size();

  // Component k measures (|e_k><e_k|, 1 - |e_k><e_k|) embedded in the m+1
  // refined outcomes; the map sends piece k to its parent and the last
  // outcome to failure.
  std::vector<WeightedProjective> measurements;
  std::vector<BinaryComponent> components;
  std::vector<std::size_t> assignment(m + 1);
  const Matrix identity = Matrix::Identity(d, d);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& piece = refined.pieces[k];
    const Matrix plus = projector(piece.vector);
    EffectList effects(m + 1, Matrix::Zero(d, d));
    effects[k] = plus;
    effects[m] = identity - plus;
    const double weight = piece.weight / static_cast<double>(d);
    measurements.push_back({weight, ProjectiveMeasurement::from_povm(Povm::from_effects(std::move(effects)))});
    components.push_back({weight, piece.vector, k, piece.parent});
    assignment[k] = piece.parent;
  }
  assignment[m] = n;
  ProjectiveSimulation simulation{std::move(measurements),
                                  PostProcessingMap::deterministic(n + 1, assignment)};
  return PostselectionScheme(povm, std::move(simulation), std::move(components),
                             1.0 / static_cast<double>(d));
}

ShotRecord sample_postselection(const PostselectionScheme& scheme, const QuantumState& state,
                                std::size_t shots, std::uint64_t seed,
                                const SamplerOptions& options) {
  if (state.dim() != scheme.target().dim()) {
    throw DimensionError("sample_postselection: state dimension does not match the POVM");
  }
  if (shots < 1) throw PreconditionError("sample_postselection: shots must be >= 1");

  const auto fail = static_cast<std::uint32_t>(scheme.failure_label());
  ShotRecord record;
  record.seed = seed;
  record.num_labels = scheme.target().size() + 1;
  record.fail_label = fail;
  record.outcomes.resize(shots);

  const Matrix& rho = state.density_matrix();
  std::vector<double> weights;
  std::vector<double> plus;
  std::vector<std::uint32_t> parent;
  for (const auto& c : scheme.components()) {
    weights.push_back(c.weight);
    plus.push_back(std::clamp((c.psi.adjoint() * rho * c.psi)(0, 0).real(), 0.0, 1.0));
    parent.push_back(static_cast<std::uint32_t>(c.parent));
  }
  const std::vector<double> component_cdf = cumulative(weights);

  std::vector<double> composite;
  if (options.mode == SamplingMode::kComposite) {
    const double q = scheme.success_probability();
    for (double p : born_probabilities(state, scheme.target())) composite.push_back(q * p);
    composite.push_back(1.0 - q);
  }
  const std::vector<double> composite_cdf = cumulative(composite);

  const std::size_t chunks = (shots + kChunkShots - 1) / kChunkShots;
  auto run_chunk = [&](std::size_t c) {
    Rng rng(Rng::derive(seed, c));
    const std::size_t begin = c * kChunkShots;
    const std::size_t end = std::min(shots, begin + kChunkShots);
    std::span<std::uint32_t> out(record.outcomes.data() + begin, end - begin);
    if (options.mode == SamplingMode::kComposite) {
      draw_from_cdf(composite_cdf, rng, out);
      return;
    }
    for (auto& o : out) {
      const double u = rng.uniform() * component_cdf.back();
      auto k = static_cast<std::size_t>(std::upper_bound(component_cdf.begin(), component_cdf.end(), u) -
                                        component_cdf.begin());
      k = std::min(k, component_cdf.size() - 1);
      o = rng.uniform() < plus[k] ? parent[k] : fail;
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < chunks; c += threads) run_chunk(c);
      });
    }
  }
  return record;
}

}  // namespace povmsim
