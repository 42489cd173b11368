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
#include <limits>

#include <gtest/gtest.h>

#include "povmsim/born.h"
#include "povmsim/error.h"
#include "povmsim/fixtures.h"
#include "povmsim/io.h"
#include "povmsim/linalg.h"
#include "povmsim/povm.h"
#include "povmsim/random.h"
#include "povmsim/state.h"
#include "povmsim/usd.h"
#include "test_util.h"

namespace povmsim {
namespace {

using testing::born_oracle;
using testing::max_entry_diff;

Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

Matrix random_hermitian(Index d, Rng& rng) {
  Matrix a(d, d);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) a(r, c) = rng.complex_normal();
  return a + a.adjoint();
}

TEST(OperatorNorm, SimpleCases) {
  EXPECT_NEAR(operator_norm(Matrix::Identity(3, 3)), 1.0, 1e-15);
  EXPECT_EQ(operator_norm(Matrix::Zero(2, 2)), 0.0);
  EXPECT_NEAR(operator_norm(diag({0.3, -0.7})), 0.7, 1e-15);
}

TEST(OperatorNorm, EvenInSignAndMatchesSvd) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_hermitian(4, rng);
    EXPECT_NEAR(operator_norm(a), operator_norm(-a), 1e-12);
    EXPECT_NEAR(operator_norm(a), testing::norm_oracle(a), 1e-10);
  }
}

TEST(OperatorNorm, RejectsNonFinite) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(operator_norm(m), Error);
}

TEST(MinEigenvalue, Cases) {
  EXPECT_NEAR(min_eigenvalue(Matrix::Identity(3, 3)), 1.0, 1e-15);
  EXPECT_NEAR(min_eigenvalue(diag({2, 0.5, 1})), 0.5, 1e-15);
  Rng rng(3);
  Matrix psi(5, 5);
  psi = haar_random_unitary(5, rng);
  EXPECT_NEAR(min_eigenvalue(psi.adjoint() * psi), 1.0, 1e-12);
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  EXPECT_THROW(min_eigenvalue(skew), InvariantError);
}

TEST(Born, TetrahedralOnZero) {
  const auto p = born_probabilities(*named_qubit_state("zero"), tetrahedral_povm());
  const std::vector<double> expected = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p[i], expected[i], 1e-12);
}

TEST(Born, TrivialAndTrineOnMixed) {
  EXPECT_NEAR(born_probabilities(*named_qubit_state("plus"), Povm::trivial(2))[0], 1.0, 1e-15);
  for (double p : born_probabilities(QuantumState::maximally_mixed(2), trine_povm())) EXPECT_NEAR(p, 1.0 / 3, 1e-12);
}

TEST(Born, DimensionMismatch) {
  EXPECT_THROW(born_probabilities(QuantumState::maximally_mixed(3), tetrahedral_povm()), DimensionError);
}

TEST(Born, NormalizedAndMatchesOracleOnRandomInputs) {
  Rng rng(5);
  for (Index d = 2; d <= 5; ++d) {
    for (int t = 0; t < 10; ++t) {
      const Povm m = random_povm(d, 3 + static_cast<std::size_t>(t % 3), rng);
      const QuantumState s = QuantumState::pure(haar_random_vector(d, rng));
      const auto p = born_probabilities(s, m);
      const auto q = born_oracle(s.density_matrix(), m.matrices());
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_GE(p[i], 0.0);
        EXPECT_LE(p[i], 1.0);
        EXPECT_NEAR(p[i], q[i], 1e-12);
        sum += p[i];
      }
      EXPECT_NEAR(sum, 1.0, 1e-9 * static_cast<double>(d));
    }
  }
}

TEST(Povm, RejectsNegativeEffect) {
  EXPECT_THROW(Povm::from_effects({diag({1.01, 0.5}), diag({-0.01, 0.5})}), InvariantError);
}

TEST(Povm, RejectsIncompleteList) {
  try {
    Povm::from_effects({diag({0.45, 0.45}), diag({0.45, 0.45})});
    FAIL() << "expected a completeness error";
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.invariant(), "completeness");
    EXPECT_NEAR(e.magnitude(), 0.1, 1e-12);
  }
}

TEST(Povm, RejectsNonHermitianEffect) {
  Matrix a = diag({0.5, 0.5});
  a(0, 1) = 0.1;
  Matrix b = Matrix::Identity(2, 2) - a;
  EXPECT_THROW(Povm::from_effects({a, b}), InvariantError);
}

TEST(Povm, AllowsNullEffects) {
  const Povm p = Povm::from_effects({diag({1, 0}), Matrix::Zero(2, 2), diag({0, 1})});
  EXPECT_EQ(p.size(), 3u);
  EXPECT_NO_THROW(ProjectiveMeasurement::from_povm(p));
}

TEST(ProjectiveMeasurement, RejectsNonIdempotentEffects) {
  EXPECT_THROW(ProjectiveMeasurement::from_povm(tetrahedral_povm()), InvariantError);
  EXPECT_NO_THROW(ProjectiveMeasurement::from_povm(Povm::computational_basis(3)));
}

TEST(BlochVector, RoundTrip) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Povm p = random_povm(2, 3, rng);
    for (const auto& e : p.matrices()) {
      const BlochVector b = BlochVector::from_matrix(e);
      EXPECT_LT(max_entry_diff(b.to_matrix(), e), 1e-12);
      EXPECT_TRUE(b.is_physical());
    }
  }
}

TEST(BlochVector, FlagsUnphysical) {
  EXPECT_FALSE((BlochVector{1.0, {0.0, 0.0, 1.2}}).is_physical());
  EXPECT_FALSE((BlochVector{1.5, {0.0, 0.0, 0.9}}).is_physical());
  EXPECT_TRUE((BlochVector{1.0, {0.0, 0.0, 1.0}}).is_physical());
}

TEST(QuantumState, Validation) {
  EXPECT_THROW(QuantumState::pure(testing::qubit(1.0, 0.1)), InvariantError);
  EXPECT_THROW(QuantumState::density(diag({0.6, 0.6})), InvariantError);
  EXPECT_THROW(QuantumState::density(diag({1.1, -0.1})), InvariantError);
}

TEST(Haar, OneDimensionalStateIsAPhase) {
  const QuantumState s = haar_random_pure_state(1, 42);
  EXPECT_NEAR(std::abs(s.vector()(0)), 1.0, 1e-15);
}

TEST(Haar, NormalizedAndReproducible) {
  const QuantumState a = haar_random_pure_state(4, 1234);
  const QuantumState b = haar_random_pure_state(4, 1234);
  EXPECT_NEAR(a.vector().norm(), 1.0, 1e-12);
  EXPECT_EQ(a.vector(), b.vector());
  EXPECT_NE(a.vector(), haar_random_pure_state(4, 1235).vector());
}

TEST(Haar, FirstComponentMoment) {
  // |<e_1|psi>|^2 is Beta(1, 3) distributed at D = 4: mean 1/4, variance 3/80.
  constexpr int kDraws = 100000;
  Rng rng(77);
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) sum += std::norm(haar_random_vector(4, rng)(0));
  const double sigma = std::sqrt(3.0 / 80.0 / kDraws);
  EXPECT_NEAR(sum / kDraws, 0.25, 3 * sigma);
}

TEST(Haar, UnitaryIsUnitary) {
  Rng rng(8);
  const Matrix u = haar_random_unitary(6, rng);
  EXPECT_LT(max_entry_diff(u.adjoint() * u, Matrix::Identity(6, 6)), 1e-12);
}

TEST(Rng, DerivedStreamsDiffer) {
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(2, 0));
  EXPECT_EQ(Rng::derive(5, 3), Rng::derive(5, 3));
}

TEST(Io, PovmRoundTrip) {
  for (const auto& name : fixture_names()) {
    const Povm p = *builtin_fixture(name);
    const Povm q = povm_from_json(Json::parse(povm_to_json(p).dump()));
    EXPECT_LT(max_abs_diff(p.matrices(), q.matrices()), 1e-12) << name;
    EXPECT_EQ(p.labels(), q.labels());
  }
}

TEST(Io, IncompleteDocumentNamesTheInvariant) {
  Json bad = povm_to_json(Povm::computational_basis(2));
  bad["effects"][0][0][0] = Json::array({0.9, 0.0});
  bad["effects"][1][1][1] = Json::array({0.9, 0.0});
  try {
    povm_from_json(bad);
    FAIL() << "expected a completeness error";
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.invariant(), "completeness");
    EXPECT_NE(std::string(e.what()).find("completeness"), std::string::npos);
  }
}

TEST(Io, NonPsdDocumentIsRejected) {
  Json bad = povm_to_json(Povm::computational_basis(2));
  bad["effects"][0][1][1] = Json::array({-0.01, 0.0});
  bad["effects"][1][1][1] = Json::array({1.01, 0.0});
  EXPECT_THROW(povm_from_json(bad), InvariantError);
}

TEST(Io, MalformedDocuments) {
  EXPECT_THROW(povm_from_json(Json::parse(R"({"effects": []})")), ParseError);
  EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 1, "effects": [[[1.0]]]})")), ParseError);
  EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 2, "effects": [[[[1,0]]]]})")), DimensionError);
}

TEST(Io, StateAndEnsembleRoundTrip) {
  const QuantumState s = haar_random_pure_state(3, 4);
  const QuantumState t = state_from_json(Json::parse(state_to_json(s).dump()));
  EXPECT_LT((s.vector() - t.vector()).cwiseAbs().maxCoeff(), 1e-12);

  const QuantumState mixed = QuantumState::maximally_mixed(2);
  EXPECT_LT(max_entry_diff(state_from_json(state_to_json(mixed)).density_matrix(), mixed.density_matrix()), 1e-12);

  Rng rng(2);
  const Ensemble e = Ensemble::from_states({haar_random_vector(3, rng), haar_random_vector(3, rng)}, {0.3, 0.7});
  const Ensemble f = ensemble_from_json(Json::parse(ensemble_to_json(e).dump()));
  EXPECT_LT(max_entry_diff(e.state_matrix(), f.state_matrix()), 1e-12);
  EXPECT_EQ(e.probs(), f.probs());
}

}  // namespace
}  // namespace povmsim
