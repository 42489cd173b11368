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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "povmsim/povm.h"
#include "povmsim/tomography.h"

namespace povmsim {

// Qubit measurements used throughout the examples and tests. The ideal
// tetrahedral and trine POVMs are exact. The random 4-outcome POVM is
// printed to 3 digits, which leaves it slightly outside the POVM set; the
// valid fixture is its nearest rank-one repair (see random4_povm).

Povm tetrahedral_povm();
Povm trine_povm();

/// The printed 3-digit random 4-outcome effects, unvalidated.
EffectList random4_printed();

/// Top eigenpair of each printed effect, then S^{-1/2} M_i S^{-1/2} with
/// S the sum; entries move by less than 1e-3.
Povm random4_povm();

enum class Implementation { kPostselection, kNaimark };

/// Effects reconstructed by tomography on hardware for "tetrahedral",
/// "trine" and "random4". The trine Naimark list has a fourth, residual
/// effect. Returns nullopt for other names.
std::optional<EffectList> hardware_reconstruction(std::string_view povm, Implementation method);

/// Names accepted by builtin_fixture and load_fixture.
std::vector<std::string> fixture_names();

/// tetrahedral, trine, random4, trivial (qubit identity), computational
/// (qubit basis PM).
std::optional<Povm> builtin_fixture(std::string_view name);

/// $POVMSIM_FIXTURE_DIR if set, else the directory shipped with the source.
std::filesystem::path fixture_dir();

/// Reads <fixture_dir>/<name>.json. Unknown names raise PreconditionError
/// listing the available fixtures.
Povm load_fixture(std::string_view name);

/// Writes every POVM fixture and hardware reconstruction to `dir`.
void export_fixtures(const std::filesystem::path& dir);

/// Operational distances between the ideal printed POVMs and their
/// hardware reconstructions, Naimark rows first.
std::vector<DistanceRow> hardware_distance_table();

}  // namespace povmsim
