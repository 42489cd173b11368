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
#include <limits>
#include <random>

#include "povmsim/linalg.h"
#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim {

/// Seedable 64-bit generator. Sub-streams are derived with derive(), so a
/// task partition never changes the numbers drawn for a given seed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal() { return normal_(engine_); }
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();

  /// Independent seed for stream `stream` of experiment `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Normalized complex Gaussian vector: the first column of a Haar unitary.
Vector haar_random_vector(Index dim, Rng& rng);
QuantumState haar_random_pure_state(Index dim, std::uint64_t seed);

/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases fixed.
Matrix haar_random_unitary(Index dim, Rng& rng);

/// Rank-one POVM from the first `dim` entries of each column of an
/// outcomes x outcomes Haar unitary.
Povm random_rank_one_povm(Index dim, std::size_t outcomes, Rng& rng);

/// Generic full-rank POVM: Ginibre positive operators G_i, congruence by
/// (sum G)^{-1/2}.
Povm random_povm(Index dim, std::size_t outcomes, Rng& rng);

}  // namespace povmsim
