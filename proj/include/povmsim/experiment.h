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

#include "povmsim/device.h"
#include "povmsim/povm.h"
#include "povmsim/tomography.h"

namespace povmsim {

/// N_j = round(cap * alpha_j / max alpha). Frequencies built from such
/// blocks are normalized by sum_j N_j downstream.
std::vector<std::size_t> proportional_shot_allocation(std::span<const double> weights, std::size_t cap = 8192);

enum class Randomization {
  kPerShot,          // draw a component for every shot
  kBlockAllocation,  // run each component for its allocated block of shots
};

struct CompareOptions {
  NoiseModel noise;
  std::size_t shots = 8192;  // per probe and x-gate variant
  std::uint64_t seed = 1;
  Randomization randomization = Randomization::kPerShot;
};

struct SchemeRun {
  TomographyRecord record;  // bias-mitigated
  Reconstruction reconstruction;
  double distance;  // operational distance to the ideal POVM
};

/// Postselection scheme on one qubit: each binary component is compiled to
/// a single SU(2) gate; both readout-flip variants are taken and averaged.
SchemeRun run_postselection_tomography(const Povm& povm, const CompareOptions& options);

/// Naimark dilation on two qubits, compiled to CNOTs and SU(2) gates; all
/// four readout-flip variants are taken and averaged. The reconstruction
/// keeps the padding outcomes as residual effects.
SchemeRun run_naimark_tomography(const Povm& povm, const CompareOptions& options);

struct Comparison {
  SchemeRun postselection;
  SchemeRun naimark;
  double postselection_fraction;  // accepted runs over all runs
  double residual_mass;           // sum of tr(M_i)/2 over padding outcomes
};

/// Both pipelines on a rank-one qubit POVM with at most 4 outcomes.
Comparison compare_schemes(const Povm& povm, const CompareOptions& options);

}  // namespace povmsim
