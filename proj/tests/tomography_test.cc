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
#include <sstream>

#include <gtest/gtest.h>

#include "povmsim/error.h"
#include "povmsim/fixtures.h"
#include "povmsim/random.h"
#include "povmsim/tomography.h"
#include "test_util.h"

namespace povmsim {
namespace {

using testing::distance_oracle;
using testing::max_entry_diff;

TEST(Probes, OrderAndStates) {
  const auto& p = tomography_probes();
  EXPECT_EQ(p[0].name, "zero");
  EXPECT_EQ(p[3].name, "plus_i");
  EXPECT_NEAR(p[2].state.density_matrix()(0, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(p[3].state.density_matrix()(1, 0).imag(), 0.5, 1e-15);
}

TEST(Reconstruct, SingleEffectAnalytic) {
  const BlochVector b = reconstruct_effect(0.5, 0.5, 0.5, 0.5);
  EXPECT_NEAR(b.alpha, 1.0, 1e-15);
  EXPECT_NEAR(b.length(), 0.0, 1e-15);
  EXPECT_THROW(reconstruct_effect(0.0, 0.0, 0.1, 0.1), PreconditionError);
}

TEST(Reconstruct, ExactStatisticsRoundTrip) {
  for (const Povm& m : {tetrahedral_povm(), trine_povm(), random4_povm(), Povm::computational_basis(2)}) {
    const Reconstruction r = reconstruct_povm(exact_record(m.matrices()));
    EXPECT_LT(max_entry_diff(r.effects, m.matrices()), 1e-10);
    EXPECT_LT(r.completeness_defect, 1e-12);
    EXPECT_TRUE(r.unphysical.empty());
  }
}

TEST(Reconstruct, RandomPovms) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Povm m = random_povm(2, 2 + static_cast<std::size_t>(t % 4), rng);
    EXPECT_LT(max_entry_diff(reconstruct_povm(exact_record(m.matrices())).effects, m.matrices()), 1e-10);
  }
}

TEST(Reconstruct, SilentOutcomeIsZero) {
  TomographyRecord r = exact_record(Povm::computational_basis(2).matrices());
  r.num_outcomes = 3;
  for (auto& c : r.counts) c.push_back(0.0);
  const Reconstruction rec = reconstruct_povm(r);
  ASSERT_EQ(rec.effects.size(), 3u);
  EXPECT_EQ(rec.effects[2].cwiseAbs().maxCoeff(), 0.0);
}

TEST(Reconstruct, FlagsUnphysicalEffects) {
  TomographyRecord r = TomographyRecord::zeros(2);
  // Outcome 0 fires on |0>, |1>, |x+> but never on |y+>: |n| > 1.
  r.counts[0] = {1.0, 0.0};
  r.counts[1] = {1.0, 0.0};
  r.counts[2] = {1.0, 0.0};
  r.counts[3] = {0.0, 1.0};
  const Reconstruction rec = reconstruct_povm(r);
  EXPECT_FALSE(rec.unphysical.empty());
}

TEST(Record, FrequenciesExcludeRejected) {
  TomographyRecord r = TomographyRecord::zeros(2);
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    r.counts[p] = {30.0, 10.0};
    r.rejected[p] = 40.0;
  }
  EXPECT_DOUBLE_EQ(r.frequencies(0)[0], 0.75);
  EXPECT_DOUBLE_EQ(r.acceptance_fraction(), 0.5);
  EXPECT_DOUBLE_EQ(r.total(2), 80.0);
}

TEST(Distance, MatchesEnumeration) {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const Povm a = random_povm(2, 4, rng);
    const Povm b = random_povm(2, 3, rng);
    EXPECT_NEAR(operational_distance(a.matrices(), b.matrices()), distance_oracle(a.matrices(), b.matrices()), 1e-12);
    EXPECT_NEAR(operational_distance(a, b), distance_oracle(a.matrices(), b.matrices()), 1e-12);
  }
}

TEST(Distance, MetricAxiomsOnFixtures) {
  const std::vector<EffectList> f = {tetrahedral_povm().matrices(), trine_povm().matrices(),
                                     random4_povm().matrices(), Povm::computational_basis(2).matrices()};
  for (const auto& a : f) {
    EXPECT_NEAR(operational_distance(a, a), 0.0, 1e-15);
    for (const auto& b : f) {
      const double ab = operational_distance(a, b);
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0 + 1e-12);
      EXPECT_NEAR(ab, operational_distance(b, a), 1e-14);
      for (const auto& c : f) EXPECT_LE(ab, operational_distance(a, c) + operational_distance(c, b) + 1e-12);
    }
  }
}

TEST(Distance, ComplementSymmetry) {
  // For complete lists the subset x and its complement give the same norm.
  Rng rng(10);
  const EffectList a = random_povm(2, 3, rng).matrices();
  const EffectList b = random_povm(2, 3, rng).matrices();
  for (std::size_t mask = 1; mask < 7; ++mask) {
    Matrix s = Matrix::Zero(2, 2), c = Matrix::Zero(2, 2);
    for (std::size_t i = 0; i < 3; ++i) ((mask >> i & 1) ? s : c) += a[i] - b[i];
    EXPECT_NEAR(testing::norm_oracle(s), testing::norm_oracle(c), 1e-12);
  }
}

TEST(Distance, OrthogonalProjectiveMeasurements) {
  Vector x(2);
  x << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Vector y(2);
  y << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  const Povm z = Povm::computational_basis(2);
  const Povm h = Povm::from_effects({testing::ket_bra(x), testing::ket_bra(y)});
  EXPECT_NEAR(operational_distance(z, h), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(operational_distance(z.matrices(), EffectList(21, Matrix::Zero(2, 2))), PreconditionError);
}

TEST(BiasMitigation, NeutralOnUnbiasedData) {
  // Without bias, variant v reads the logical record with its labels
  // xor-ed by v.
  const TomographyRecord r = exact_record(random4_povm().matrices());
  std::vector<TomographyRecord> variants;
  for (std::size_t v = 0; v < 4; ++v) variants.push_back(relabel_register_outcomes(r, v));
  const TomographyRecord m = bias_mitigated_statistics(variants);
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(m.counts[p][j], r.counts[p][j], 1e-15);
  }
}

TEST(BiasMitigation, SymmetrizesOneQubitBias) {
  // True probabilities (p, 1 - p); readout moves a 1 to 0 with probability b.
  const double p = 0.3, b = 0.1;
  TomographyRecord plain = TomographyRecord::zeros(2), flipped = TomographyRecord::zeros(2);
  for (std::size_t k = 0; k < kNumProbes; ++k) {
    plain.counts[k] = {p + b * (1 - p), (1 - b) * (1 - p)};
    // With an x gate the register holds (1 - p, p) before readout.
    flipped.counts[k] = {(1 - p) + b * p, (1 - b) * p};
  }
  const std::vector<TomographyRecord> variants = {plain, flipped};
  const TomographyRecord m = bias_mitigated_statistics(variants);
  EXPECT_NEAR(m.frequencies(0)[0], (1 - b) * p + b / 2, 1e-15);
}

TEST(BiasMitigation, Preconditions) {
  const TomographyRecord r = exact_record(trine_povm().matrices());
  const std::vector<TomographyRecord> three = {r, r, r};
  EXPECT_THROW(bias_mitigated_statistics(three), PreconditionError);
  TomographyRecord other = r;
  other.counts[0][0] += 1.0;
  const std::vector<TomographyRecord> mismatched = {r, other};
  EXPECT_THROW(average_records(mismatched), PreconditionError);
}

TEST(Relabel, XorMask) {
  TomographyRecord r = TomographyRecord::zeros(4);
  r.counts[0] = {1, 2, 3, 4};
  const TomographyRecord s = relabel_register_outcomes(r, 2);
  EXPECT_EQ(s.counts[0], (std::vector<double>{3, 4, 1, 2}));
}

TEST(Csv, TomographyRows) {
  TomographyRecord r = TomographyRecord::zeros(2);
  r.counts[0] = {3, 1};
  r.rejected[0] = 4;
  std::ostringstream out;
  write_tomography_csv(out, r);
  EXPECT_NE(out.str().find("probe,outcome,count,shots"), std::string::npos);
  EXPECT_NE(out.str().find("zero,fail,4,8"), std::string::npos);
}

}  // namespace
}  // namespace povmsim
