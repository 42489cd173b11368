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
#include <string>

#include "json.hpp"

#include "povmsim/povm.h"
#include "povmsim/state.h"
#include "povmsim/usd.h"

namespace povmsim {

class PostselectionScheme;

using Json = nlohmann::json;

// Exchange format: complex numbers are [re, im], matrices are arrays of
// rows. A POVM is {"dim", "effects", "labels"}, a pure state {"dim",
// "vector"}, an ensemble {"states", "probs"}.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json povm_to_json(const Povm& povm);
Povm povm_from_json(const Json& j);
/// Same layout as a POVM but without validation; for reconstructed effects.
Json effects_to_json(const EffectList& effects, const std::vector<std::string>& labels = {});
EffectList effects_from_json(const Json& j);

Json state_to_json(const QuantumState& state);
QuantumState state_from_json(const Json& j);

Json ensemble_to_json(const Ensemble& ensemble);
Ensemble ensemble_from_json(const Json& j);

/// {"dim", "matrix"}.
Json unitary_to_json(const Matrix& u);

/// Components, weights, relabeling table and success probability.
Json scheme_to_json(const PostselectionScheme& scheme);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace povmsim
