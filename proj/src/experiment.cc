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

#include "povmsim/experiment.h"

#include <algorithm>
#include <cmath>

#include "povmsim/compiler.h"
#include "povmsim/error.h"
#include "povmsim/naimark.h"
#include "povmsim/postselection.h"
#include "povmsim/random.h"

namespace povmsim {

namespace {

constexpr std::uint64_t kPostselectionStream = 0x5053;
constexpr std::uint64_t kNaimarkStream = 0x4e4d;

std::size_t draw(const std::vector<double>& p, Rng& rng) {
  double u = rng.uniform();
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (u < p[k]) return k;
    u -= p[k];
  }
  return p.size() - 1;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t scheme, std::size_t variant, std::size_t probe) {
  return Rng::derive(Rng::derive(seed, scheme), variant * kNumProbes + probe);
}

}  // namespace

std::vector<std::size_t> proportional_shot_allocation(std::span<const double> weights, std::size_t cap) {
  if (weights.empty()) throw PreconditionError("proportional_shot_allocation: no weights");
  if (cap < 1) throw PreconditionError("proportional_shot_allocation: cap must be >= 1");
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
    throw PreconditionError("proportional_shot_allocation: weights must be positive");
  }
  const double top = *std::max_element(weights.begin(), weights.end());
  std::vector<std::size_t> shots;
  for (double w : weights) shots.push_back(static_cast<std::size_t>(std::llround(static_cast<double>(cap) * w / top)));
  return shots;
}

SchemeRun run_postselection_tomography(const Povm& povm, const CompareOptions& options) {
  if (povm.dim() != 2) throw PreconditionError("run_postselection_tomography: qubit POVM expected");
  options.noise.validate();
  const PostselectionScheme scheme = postselection_scheme(povm);
  const auto components = scheme.components();
  std::vector<double> weights;
  for (const auto& c : components) weights.push_back(c.weight);
  const std::vector<std::size_t> blocks = proportional_shot_allocation(weights, options.shots);

  std::vector<TomographyRecord> variants;
  for (std::size_t v = 0; v < 2; ++v) {
    TomographyRecord record = TomographyRecord::zeros(povm.size());
    for (std::size_t p = 0; p < kNumProbes; ++p) {
      const QuantumState& probe = tomography_probes()[p].state;
      std::vector<std::vector<double>> readout;
      for (const auto& c : components) {
        readout.push_back(outcome_distribution(with_readout_flips(compile_postselection_circuit(c.psi), v), probe,
                                               options.noise));
      }
      Rng rng(stream_seed(options.seed, kPostselectionStream, v, p));
      auto shoot = [&](std::size_t c) {
        // Reading v means '+' once the x gate is undone.
        if ((draw(readout[c], rng) ^ v) == 0) {
          record.counts[p][components[c].parent] += 1.0;
        } else {
          record.rejected[p] += 1.0;
        }
      };
      if (options.randomization == Randomization::kPerShot) {
        for (std::size_t s = 0; s < options.shots; ++s) shoot(draw(weights, rng));
      } else {
        for (std::size_t c = 0; c < components.size(); ++c) {
          for (std::size_t s = 0; s < blocks[c]; ++s) shoot(c);
        }
      }
    }
    variants.push_back(std::move(record));
  }

  SchemeRun run{average_records(variants), {}, 0.0};
  run.reconstruction = reconstruct_povm(run.record);
  run.distance = operational_distance(run.reconstruction.effects, povm.matrices());
  return run;
}

SchemeRun run_naimark_tomography(const Povm& povm, const CompareOptions& options) {
  if (povm.dim() != 2) throw PreconditionError("run_naimark_tomography: qubit POVM expected");
  options.noise.validate();
  const NaimarkDilation dilation = naimark_dilation(povm, DilationMode::kQubitRegister);
  const Circuit circuit = compile_naimark_circuit(dilation);

  std::vector<TomographyRecord> variants;
  for (std::size_t v = 0; v < 4; ++v) {
    const Circuit flipped = with_readout_flips(circuit, v);
    TomographyRecord record = TomographyRecord::zeros(4);
    for (std::size_t p = 0; p < kNumProbes; ++p) {
      const QuantumState input = embed_state(dilation, tomography_probes()[p].state);
      const ShotRecord shots =
          run_shots(flipped, input, options.noise, options.shots, stream_seed(options.seed, kNaimarkStream, v, p));
      const auto counts = shots.counts();
      for (std::size_t j = 0; j < 4; ++j) record.counts[p][j] = static_cast<double>(counts[j]);
    }
    variants.push_back(std::move(record));
  }

  SchemeRun run{bias_mitigated_statistics(variants), {}, 0.0};
  run.reconstruction = reconstruct_povm(run.record);
  run.distance = operational_distance(run.reconstruction.effects, povm.matrices());
  return run;
}

Comparison compare_schemes(const Povm& povm, const CompareOptions& options) {
  Comparison out{run_postselection_tomography(povm, options), run_naimark_tomography(povm, options), 0.0, 0.0};
  out.postselection_fraction = out.postselection.record.acceptance_fraction();
  const auto& effects = out.naimark.reconstruction.effects;
  for (std::size_t i = povm.size(); i < effects.size(); ++i) out.residual_mass += 0.5 * effects[i].trace().real();
  return out;
}

}  // namespace povmsim
