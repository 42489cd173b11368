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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "povmsim/born.h"
#include "povmsim/covariant.h"
#include "povmsim/error.h"
#include "povmsim/fixtures.h"
#include "povmsim/postprocessing.h"
#include "povmsim/postselection.h"
#include "povmsim/random.h"
#include "test_util.h"

namespace povmsim {
namespace {

using testing::ket_bra;
using testing::max_entry_diff;
using testing::qubit;

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

TEST(RankOneRefinement, RankOneInputIsUnchanged) {
  const Povm tetra = tetrahedral_povm();
  const RankOneRefinement r = rank_one_refinement(tetra);
  ASSERT_EQ(r.povm.size(), 4u);
  EXPECT_LT(max_entry_diff(r.povm.matrices(), tetra.matrices()), 1e-12);
  EXPECT_TRUE(r.merge.matrix() == Eigen::MatrixXd::Identity(4, 4));
}

TEST(RankOneRefinement, TrivialSplitsIntoABasis) {
  const RankOneRefinement r = rank_one_refinement(Povm::trivial(2));
  ASSERT_EQ(r.povm.size(), 2u);
  for (const auto& e : r.povm.matrices()) {
    EXPECT_NEAR(e.trace().real(), 1.0, 1e-12);
    EXPECT_LT(max_entry_diff(e * e, e), 1e-12);
  }
  EXPECT_EQ(r.merge.outputs(), 1u);
  EXPECT_LT(max_entry_diff(apply_postprocessing(r.povm, r.merge).effect(0), Matrix::Identity(2, 2)), 1e-12);
}

TEST(RankOneRefinement, DiagonalExampleOrderedByParentThenEigenvalue) {
  const Povm m = Povm::from_effects({diag2(0.7, 0.2), diag2(0.3, 0.8)});
  const RankOneRefinement r = rank_one_refinement(m);
  const EffectList expected = {diag2(0.7, 0), diag2(0, 0.2), diag2(0, 0.8), diag2(0.3, 0)};
  EXPECT_LT(max_entry_diff(r.povm.matrices(), expected), 1e-12);
  const std::vector<std::size_t> parents = {0, 0, 1, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(r.pieces[k].parent, parents[k]);
    EXPECT_EQ(r.merge(parents[k], k), 1.0);
  }
  EXPECT_LT(max_entry_diff(apply_postprocessing(r.povm, r.merge).matrices(), m.matrices()), 1e-12);
}

TEST(RankOneRefinement, ReproducesRandomPovms) {
  Rng rng(21);
  for (Index d = 2; d <= 4; ++d) {
    const Povm m = random_povm(d, 3, rng);
    const RankOneRefinement r = rank_one_refinement(m);
    EXPECT_EQ(r.povm.size(), 3u * static_cast<std::size_t>(d));
    EXPECT_LT(max_entry_diff(apply_postprocessing(r.povm, r.merge).matrices(), m.matrices()), 1e-9);
  }
}

TEST(PostProcessing, IdentityAndGlueAll) {
  const Povm tetra = tetrahedral_povm();
  EXPECT_LT(max_entry_diff(apply_postprocessing(tetra, PostProcessingMap::identity(4)).matrices(), tetra.matrices()),
            1e-15);
  const std::vector<std::size_t> all_to_one = {0, 0, 0, 0};
  const Povm glued = apply_postprocessing(tetra, PostProcessingMap::deterministic(1, all_to_one));
  ASSERT_EQ(glued.size(), 1u);
  EXPECT_LT(max_entry_diff(glued.effect(0), Matrix::Identity(2, 2)), 1e-12);
}

TEST(PostProcessing, GlueLastTwoOutcomes) {
  const Povm mq = build_mq(tetrahedral_povm(), 0.5);  // d + 3 = 5 outcomes
  const Povm extended = Povm::from_effects([&] {
    EffectList e = mq.matrices();
    e.back() *= 0.4;
    e.push_back(mq.matrices().back() * 0.6);
    return e;
  }());
  const Povm glued = apply_postprocessing(extended, PostProcessingMap::glue(6, 4, 5));
  ASSERT_EQ(glued.size(), 5u);
  EXPECT_LT(max_entry_diff(glued.matrices(), mq.matrices()), 1e-12);
}

TEST(PostProcessing, RejectsNonStochasticMaps) {
  Eigen::MatrixXd q(2, 2);
  q << 0.5, 0.2, 0.4, 0.8;
  EXPECT_THROW(PostProcessingMap::from_matrix(q), InvariantError);
  q << 1.2, 0.0, -0.2, 1.0;
  EXPECT_THROW(PostProcessingMap::from_matrix(q), InvariantError);
  EXPECT_THROW(apply_postprocessing(tetrahedral_povm(), PostProcessingMap::identity(3)), DimensionError);
}

TEST(ConvexCombination, Cases) {
  const Povm tetra = tetrahedral_povm();
  const WeightedPovm single[] = {{1.0, tetra}};
  EXPECT_LT(max_entry_diff(convex_combination(single).matrices(), tetra.matrices()), 1e-15);

  const double h = 1.0 / std::sqrt(2.0);
  const Povm z = Povm::computational_basis(2);
  const Povm x = Povm::from_effects({ket_bra(qubit(h, h)), ket_bra(qubit(h, -h))});
  const WeightedPovm mix[] = {{0.5, z}, {0.5, x}};
  const Povm m = convex_combination(mix);
  EXPECT_LT(max_entry_diff(m.effect(0), 0.5 * (ket_bra(qubit(1, 0)) + ket_bra(qubit(h, h)))), 1e-12);

  const WeightedPovm bad[] = {{0.5, z}, {0.4, x}};
  EXPECT_THROW(convex_combination(bad), InvariantError);
}

TEST(PostProcessing, LinearOverConvexCombinations) {
  Rng rng(4);
  const Povm a = random_povm(3, 4, rng);
  const Povm b = random_povm(3, 4, rng);
  Eigen::MatrixXd q(3, 4);
  q << 0.2, 0.0, 1.0, 0.3, 0.5, 0.4, 0.0, 0.3, 0.3, 0.6, 0.0, 0.4;
  const auto map = PostProcessingMap::from_matrix(q);
  const WeightedPovm before[] = {{0.35, a}, {0.65, b}};
  const WeightedPovm after[] = {{0.35, apply_postprocessing(a, map)}, {0.65, apply_postprocessing(b, map)}};
  EXPECT_LT(max_entry_diff(apply_postprocessing(convex_combination(before), map).matrices(),
                           convex_combination(after).matrices()),
            1e-12);
}

TEST(BuildMq, Cases) {
  const Povm half = build_mq(tetrahedral_povm(), 0.5);
  ASSERT_EQ(half.size(), 5u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(half.effect(i).trace().real(), 0.25, 1e-12);
  EXPECT_LT(max_entry_diff(half.effect(4), 0.5 * Matrix::Identity(2, 2)), 1e-15);

  const Povm one = build_mq(trine_povm(), 1.0);
  EXPECT_EQ(one.effect(3).norm(), 0.0);

  const Povm trivial = build_mq(Povm::trivial(2), 0.3);
  EXPECT_LT(max_entry_diff(trivial.effect(0), 0.3 * Matrix::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_entry_diff(trivial.effect(1), 0.7 * Matrix::Identity(2, 2)), 1e-15);

  EXPECT_THROW(build_mq(Povm::trivial(2), 0.0), PreconditionError);
  EXPECT_THROW(build_mq(Povm::trivial(2), 1.5), PreconditionError);
}

TEST(PostselectionScheme, Tetrahedral) {
  const PostselectionScheme s = postselection_scheme(tetrahedral_povm());
  EXPECT_DOUBLE_EQ(s.success_probability(), 0.5);
  ASSERT_EQ(s.components().size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(s.components()[k].weight, 0.25, 1e-12);
    EXPECT_EQ(s.components()[k].parent, k);
  }
  EXPECT_EQ(s.failure_label(), 4u);
  EXPECT_LT(max_entry_diff(s.simulated_povm().matrices(), build_mq(tetrahedral_povm(), 0.5).matrices()), 1e-12);
}

TEST(PostselectionScheme, TrivialInThreeDimensions) {
  const PostselectionScheme s = postselection_scheme(Povm::trivial(3));
  EXPECT_NEAR(s.success_probability(), 1.0 / 3, 1e-15);
  for (const auto& c : s.components()) EXPECT_EQ(c.parent, 0u);
}

TEST(PostselectionScheme, RandomFixtureWeightsAreHalfTraces) {
  const Povm m = random4_povm();
  const PostselectionScheme s = postselection_scheme(m);
  ASSERT_EQ(s.components().size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s.components()[k].weight, m.effect(k).trace().real() / 2, 1e-12);
  EXPECT_LT(max_entry_diff(s.simulated_povm().matrices(), build_mq(m, 0.5).matrices()), 1e-9);
}

TEST(PostselectionScheme, AcceptanceIsStateIndependent) {
  Rng rng(31);
  const Povm m = random_povm(3, 4, rng);
  const Povm sim = postselection_scheme(m).simulated_povm();
  for (int t = 0; t < 10; ++t) {
    const QuantumState s = QuantumState::pure(haar_random_vector(3, rng));
    const auto p = born_probabilities(s, sim);
    EXPECT_NEAR(std::accumulate(p.begin(), p.end() - 1, 0.0), 1.0 / 3, 1e-12);
  }
}

TEST(Sampler, TetrahedralOnZero) {
  const PostselectionScheme s = postselection_scheme(tetrahedral_povm());
  const ShotRecord r = sample_postselection(s, *named_qubit_state("zero"), 1000000, 7);
  const auto f = r.conditional_frequencies();
  const std::vector<double> born = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  double tv = 0.0;
  for (std::size_t i = 0; i < 4; ++i) tv += 0.5 * std::abs(f[i] - born[i]);
  EXPECT_LT(tv, 0.005);
  EXPECT_NEAR(r.success_rate(), 0.5, 0.002);
}

TEST(Sampler, TrivialAlwaysReportsOutcomeOne) {
  const PostselectionScheme s = postselection_scheme(Povm::trivial(2));
  const ShotRecord r = sample_postselection(s, *named_qubit_state("plus_i"), 10000, 3);
  for (auto o : r.outcomes) EXPECT_TRUE(o == 0u || o == *r.fail_label);
}

TEST(Sampler, DeterministicAndThreadIndependent) {
  const PostselectionScheme s = postselection_scheme(trine_povm());
  const QuantumState rho = *named_qubit_state("minus");
  const ShotRecord a = sample_postselection(s, rho, 200000, 99);
  const ShotRecord b = sample_postselection(s, rho, 200000, 99);
  const ShotRecord c = sample_postselection(s, rho, 200000, 99, {SamplingMode::kTwoStage, 4});
  EXPECT_EQ(a.outcomes, b.outcomes);
  EXPECT_EQ(a.outcomes, c.outcomes);
  EXPECT_NE(a.outcomes, sample_postselection(s, rho, 200000, 100).outcomes);
}

TEST(Sampler, CompositeFastPathMatchesTwoStage) {
  const PostselectionScheme s = postselection_scheme(random4_povm());
  const QuantumState rho = *named_qubit_state("plus");
  constexpr std::size_t kShots = 1000000;
  const auto a = sample_postselection(s, rho, kShots, 5, {SamplingMode::kTwoStage, 1}).counts();
  const auto b = sample_postselection(s, rho, kShots, 6, {SamplingMode::kComposite, 1}).counts();
  const auto exact = born_probabilities(rho, s.simulated_povm());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    // Difference of two independent binomials.
    const double sigma = std::sqrt(2.0 * kShots * exact[i] * (1 - exact[i]));
    EXPECT_LT(std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])), 5 * sigma + 1) << i;
  }
}

TEST(Sampler, Preconditions) {
  const PostselectionScheme s = postselection_scheme(tetrahedral_povm());
  EXPECT_THROW(sample_postselection(s, QuantumState::maximally_mixed(3), 10, 1), DimensionError);
  EXPECT_THROW(sample_postselection(s, QuantumState::maximally_mixed(2), 0, 1), PreconditionError);
}

TEST(ShotRecord, MergeIsAssociative) {
  const PostselectionScheme s = postselection_scheme(tetrahedral_povm());
  const QuantumState rho = QuantumState::maximally_mixed(2);
  const auto a = sample_postselection(s, rho, 100, 1);
  const auto b = sample_postselection(s, rho, 200, 2);
  const auto c = sample_postselection(s, rho, 300, 3);
  EXPECT_EQ(ShotRecord::merge(ShotRecord::merge(a, b), c).outcomes,
            ShotRecord::merge(a, ShotRecord::merge(b, c)).outcomes);
  EXPECT_EQ(ShotRecord::merge(a, b).shots(), 300u);
}

TEST(Covariant, QubitOrbitIsComplete) {
  const CovariantPovm c = hw_covariant_povm(2, haar_random_pure_state(2, 8));
  EXPECT_EQ(c.povm.size(), 4u);
  EXPECT_LT(c.povm.completeness_defect(), 1e-9);
}

TEST(Covariant, ZeroFiducialRepeatsEffects) {
  const CovariantPovm c = hw_covariant_povm(2, *named_qubit_state("zero"));
  const Matrix half_zero = 0.5 * ket_bra(qubit(1, 0));
  EXPECT_LT(max_entry_diff(c.povm.effect(0), half_zero), 1e-15);
  EXPECT_LT(max_entry_diff(c.povm.effect(1), half_zero), 1e-15);
  EXPECT_FALSE(c.pairwise_noncommuting);
}

TEST(Covariant, GenericFiducialIsNonCommuting) {
  const CovariantPovm c = hw_covariant_povm(3, haar_random_pure_state(3, 17));
  ASSERT_EQ(c.povm.size(), 9u);
  EXPECT_TRUE(c.pairwise_noncommuting);
  double smallest = 1.0;
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = i + 1; j < 9; ++j) {
      const Matrix comm = c.povm.effect(i) * c.povm.effect(j) - c.povm.effect(j) * c.povm.effect(i);
      smallest = std::min(smallest, testing::norm_oracle(comm));
    }
  }
  EXPECT_GT(smallest, 1e-6);
}

TEST(Covariant, CompleteForManyFiducials) {
  for (Index d = 2; d <= 5; ++d) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const CovariantPovm c = hw_covariant_povm(d, haar_random_pure_state(d, seed));
      EXPECT_LT(c.povm.completeness_defect(), 1e-9 * static_cast<double>(d));
    }
  }
}

TEST(Covariant, Preconditions) {
  EXPECT_THROW(hw_covariant_povm(3, *named_qubit_state("zero")), DimensionError);
  EXPECT_THROW(hw_covariant_povm(2, QuantumState::maximally_mixed(2)), PreconditionError);
}

TEST(SuccessBound, RankOneNonOrthogonal) {
  EXPECT_DOUBLE_EQ(max_success_bound_rank_one(tetrahedral_povm()), 0.5);
  EXPECT_DOUBLE_EQ(max_success_bound_rank_one(hw_covariant_povm(3, haar_random_pure_state(3, 2)).povm), 1.0 / 3);
  EXPECT_THROW(max_success_bound_rank_one(Povm::computational_basis(2)), PreconditionError);
  EXPECT_THROW(max_success_bound_rank_one(Povm::trivial(2)), PreconditionError);
}

}  // namespace
}  // namespace povmsim
