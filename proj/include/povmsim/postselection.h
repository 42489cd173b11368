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
#include <span>
#include <vector>

#include "povmsim/postprocessing.h"
#include "povmsim/povm.h"
#include "povmsim/shot_record.h"
#include "povmsim/state.h"

namespace povmsim {

/// One rank-one piece weight * |vector><vector| of a refined effect.
struct RankOnePiece {
  double weight;
  Vector vector;  // unit norm
  std::size_t parent;
};

struct RankOneRefinement {
  Povm povm;                    // the rank-one effects, one per piece
  std::vector<RankOnePiece> pieces;
  PostProcessingMap merge;      // piece -> parent outcome, deterministic
};

/// Splits every effect along its eigenbasis. Eigenvalues at or below
/// tol::kPsd are dropped and the resulting completeness defect is removed
/// by the congruence S^{-1/2} (.) S^{-1/2}, S = sum of kept pieces; a defect
/// above tol::kSum is an error. Pieces are ordered by parent index, then by
/// descending eigenvalue.
RankOneRefinement rank_one_refinement(const Povm& povm);

/// (q M_1, ..., q M_n, (1 - q) 1) for q in (0, 1].
Povm build_mq(const Povm& povm, double q);

struct WeightedProjective {
  double weight;
  ProjectiveMeasurement measurement;
};

/// Randomization over projective measurements followed by post-processing.
struct ProjectiveSimulation {
  std::vector<WeightedProjective> components;
  PostProcessingMap postprocessing;

  /// sum_a p_a P^a, then the post-processing.
  Povm assemble() const;
};

/// Binary projective measurement (|psi><psi|, 1 - |psi><psi|) used by the
/// postselection protocol: "+" reports `parent`, "-" reports failure.
struct BinaryComponent {
  double weight;
  Vector psi;
  std::size_t refined_index;
  std::size_t parent;
};

/// Simulation of an n-outcome POVM by projective measurements and
/// postselection on the (n+1)-th outcome, with success probability 1/d.
class PostselectionScheme {
 public:
  PostselectionScheme(Povm target, ProjectiveSimulation simulation,
                      std::vector<BinaryComponent> components, double success_probability);

  const Povm& target() const { return target_; }
  const ProjectiveSimulation& simulation() const { return simulation_; }
  std::span<const BinaryComponent> components() const { return components_; }
  double success_probability() const { return success_probability_; }
  /// Index of the rejected outcome, equal to target().size().
  std::size_t failure_label() const { return target_.size(); }

  /// The (n+1)-outcome POVM realized by the randomized projective
  /// measurements; equals build_mq(target(), 1/d).
  Povm simulated_povm() const { return simulation_.assemble(); }

 private:
  Povm target_;
  ProjectiveSimulation simulation_;
  std::vector<BinaryComponent> components_;
  double success_probability_;
};

PostselectionScheme postselection_scheme(const Povm& povm);

enum class SamplingMode {
  kTwoStage,   // draw a component, then its binary outcome
  kComposite,  // sample the M_{1/d} distribution directly
};

struct SamplerOptions {
  SamplingMode mode = SamplingMode::kTwoStage;
  unsigned threads = 1;
};

/// Shots are cut into fixed-size chunks, each with its own derived seed, so
/// the record depends only on (scheme, state, shots, seed) and not on the
/// thread count.
ShotRecord sample_postselection(const PostselectionScheme& scheme, const QuantumState& state,
                                std::size_t shots, std::uint64_t seed,
                                const SamplerOptions& options = {});

}  // namespace povmsim
