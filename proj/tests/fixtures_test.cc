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

#include <chrono>
#include <filesystem>

#include <gtest/gtest.h>

#include "povmsim/error.h"
#include "povmsim/fixtures.h"
#include "povmsim/io.h"
#include "povmsim/tomography.h"
#include "test_util.h"

namespace povmsim {
namespace {

using testing::max_entry_diff;

bool all_rank_one(const Povm& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!rank_one_form(m.effect(i))) return false;
  }
  return true;
}

TEST(Fixtures, ShippedFilesMatchBuiltins) {
  for (const auto& name : fixture_names()) {
    EXPECT_LT(max_entry_diff(load_fixture(name).matrices(), builtin_fixture(name)->matrices()), 1e-12) << name;
  }
  for (const char* name : {"tetrahedral", "trine", "random4"}) {
    for (auto method : {Implementation::kPostselection, Implementation::kNaimark}) {
      const std::string file = std::string(name) + (method == Implementation::kNaimark ? "_naimark" : "_postselection");
      const EffectList shipped = effects_from_json(read_json_file(fixture_dir() / (file + ".json")));
      EXPECT_LT(max_entry_diff(shipped, *hardware_reconstruction(name, method)), 1e-12) << file;
    }
  }
}

TEST(Fixtures, UnknownNameListsAlternatives) {
  try {
    load_fixture("octahedral");
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("tetrahedral"), std::string::npos);
  }
}

TEST(Fixtures, ExactFixturesAreValid) {
  const Povm t = tetrahedral_povm();
  EXPECT_EQ(t.size(), 4u);
  EXPECT_TRUE(all_rank_one(t));
  EXPECT_TRUE(all_rank_one(trine_povm()));
  EXPECT_NEAR(t.effect(1)(0, 1).real(), 1 / (3 * std::sqrt(2.0)), 1e-15);
}

TEST(Fixtures, PrintedRandomPovmIsRejected) {
  // Rounding to three digits leaves a slightly negative eigenvalue.
  const EffectList printed = random4_printed();
  double lowest = 0.0;
  for (const auto& e : printed) lowest = std::min(lowest, testing::min_eig_oracle(e));
  EXPECT_LT(lowest, 0.0);
  EXPECT_THROW(Povm::from_effects(printed), InvariantError);
}

TEST(Fixtures, RepairedRandomPovmStaysClose) {
  const Povm m = random4_povm();
  EXPECT_TRUE(all_rank_one(m));
  EXPECT_LT(max_entry_diff(m.matrices(), random4_printed()), 1e-3);
}

TEST(Fixtures, HardwareDistanceTable) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = hardware_distance_table();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(rows.size(), 6u);
  const double expected[] = {0.117, 0.141, 0.168, 0.023, 0.022, 0.031};
  const char* names[] = {"tetrahedral", "trine", "random4"};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(rows[i].povm, names[i % 3]);
    EXPECT_EQ(rows[i].method, i < 3 ? "naimark" : "postselection");
    EXPECT_NEAR(rows[i].distance, expected[i], 0.003) << rows[i].povm << " " << rows[i].method;
  }
  EXPECT_LT(seconds, 1.0);
}

TEST(Fixtures, DistanceTableMatchesEnumeration) {
  const auto rows = hardware_distance_table();
  EXPECT_NEAR(rows[1].distance,
              testing::distance_oracle(trine_povm().matrices(), *hardware_reconstruction("trine", Implementation::kNaimark)),
              1e-12);
}

TEST(Fixtures, ExportRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "povmsim_export_test";
  std::filesystem::remove_all(dir);
  export_fixtures(dir);
  for (const auto& name : fixture_names()) {
    const Povm m = povm_from_json(read_json_file(dir / (name + ".json")));
    EXPECT_LT(max_entry_diff(m.matrices(), builtin_fixture(name)->matrices()), 1e-12);
  }
  EXPECT_TRUE(std::filesystem::exists(dir / "trine_naimark.json"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace povmsim
