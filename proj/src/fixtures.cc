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

#include "povmsim/fixtures.h"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "povmsim/error.h"
#include "povmsim/io.h"

#ifndef POVMSIM_FIXTURE_DIR
#define POVMSIM_FIXTURE_DIR "data/fixtures"
#endif

namespace povmsim {

namespace {

// Hermitian 2x2 from its diagonal and upper off-diagonal entry.
Matrix herm(double a, Complex b, double c) {
  Matrix m(2, 2);
  m << a, b, std::conj(b), c;
  return m;
}

Complex c(double re, double im) { return {re, im}; }

const char* method_name(Implementation method) {
  return method == Implementation::kNaimark ? "naimark" : "postselection";
}

}  // namespace

Povm tetrahedral_povm() {
  const double off = 1.0 / (3.0 * std::sqrt(2.0));
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  return Povm::from_effects({herm(0.5, 0.0, 0.0), herm(1.0 / 6, off, 1.0 / 3), herm(1.0 / 6, off * std::conj(w), 1.0 / 3),
                             herm(1.0 / 6, off * w, 1.0 / 3)});
}

Povm trine_povm() {
  const double off = 1.0 / (2.0 * std::sqrt(3.0));
  return Povm::from_effects({herm(2.0 / 3, 0.0, 0.0), herm(1.0 / 6, off, 0.5), herm(1.0 / 6, -off, 0.5)});
}

EffectList random4_printed() {
  return {herm(0.288, c(0.061, -0.049), 0.021), herm(0.063, c(0.070, -0.109), 0.264),
          herm(0.470, c(0.17, -0.002), 0.062), herm(0.179, c(-0.301, 0.160), 0.653)};
}

Povm random4_povm() {
  EffectList effects;
  for (const Matrix& m : random4_printed()) {
    const HermitianEigen eig = hermitian_eigen(m);
    effects.push_back(eig.values(1) * projector(eig.vectors.col(1)));
  }
  Matrix sum = Matrix::Zero(2, 2);
  for (const auto& e : effects) sum += e;
  const Matrix s = inverse_sqrt_psd(sum);
  for (auto& e : effects) {
    e = s * e * s;
    e = 0.5 * (e + e.adjoint()).eval();
  }
  return Povm::from_effects(std::move(effects));
}

std::optional<EffectList> hardware_reconstruction(std::string_view povm, Implementation method) {
  const bool naimark = method == Implementation::kNaimark;
  if (povm == "tetrahedral") {
    if (naimark) {
      return EffectList{herm(0.462, c(-0.025, -0.013), 0.052), herm(0.169, c(0.167, -0.017), 0.282),
                        herm(0.187, c(-0.079, -0.162), 0.294), herm(0.182, c(-0.062, 0.192), 0.371)};
    }
    return EffectList{herm(0.489, c(-0.007, 0.007), 0.016), herm(0.167, c(0.226, -0.003), 0.327),
                      herm(0.169, c(-0.107, -0.195), 0.330), herm(0.175, c(-0.112, 0.191), 0.327)};
  }
  if (povm == "trine") {
    if (naimark) {
      return EffectList{herm(0.599, c(0.003, -0.021), 0.072), herm(0.192, c(0.210, 0.004), 0.403),
                        herm(0.170, c(-0.224, 0.019), 0.460), herm(0.038, c(0.011, -0.003), 0.065)};
    }
    return EffectList{herm(0.645, c(-0.004, 0.004), 0.021), herm(0.178, c(0.272, -0.002), 0.489),
                      herm(0.177, c(-0.268, -0.001), 0.490)};
  }
  if (povm == "random4") {
    if (naimark) {
      return EffectList{herm(0.313, c(0.060, -0.044), 0.064), herm(0.089, c(0.038, -0.079), 0.303),
                        herm(0.411, c(0.129, 0.009), 0.106), herm(0.187, c(-0.227, 0.114), 0.528)};
    }
    return EffectList{herm(0.281, c(0.054, -0.046), 0.029), herm(0.068, c(0.068, -0.101), 0.261),
                      herm(0.455, c(0.160, -0.002), 0.078), herm(0.196, c(-0.282, 0.149), 0.632)};
  }
  return std::nullopt;
}

std::vector<std::string> fixture_names() { return {"tetrahedral", "trine", "random4", "trivial", "computational"}; }

std::optional<Povm> builtin_fixture(std::string_view name) {
  if (name == "tetrahedral") return tetrahedral_povm();
  if (name == "trine") return trine_povm();
  if (name == "random4") return random4_povm();
  if (name == "trivial") return Povm::trivial(2);
  if (name == "computational") return Povm::computational_basis(2);
  return std::nullopt;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("POVMSIM_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
  return POVMSIM_FIXTURE_DIR;
}

Povm load_fixture(std::string_view name) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw PreconditionError("unknown fixture '" + std::string(name) + "'; available: " + list);
  }
  return povm_from_json(read_json_file(fixture_dir() / (std::string(name) + ".json")));
}

void export_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& name : fixture_names()) write_json_file(dir / (name + ".json"), povm_to_json(*builtin_fixture(name)));
  write_json_file(dir / "random4_printed.json", effects_to_json(random4_printed()));
  for (const char* name : {"tetrahedral", "trine", "random4"}) {
    for (auto method : {Implementation::kPostselection, Implementation::kNaimark}) {
      write_json_file(dir / (std::string(name) + "_" + method_name(method) + ".json"),
                      effects_to_json(*hardware_reconstruction(name, method)));
    }
  }
}

std::vector<DistanceRow> hardware_distance_table() {
  const std::vector<std::pair<std::string, EffectList>> ideal = {
      {"tetrahedral", tetrahedral_povm().matrices()},
      {"trine", trine_povm().matrices()},
      {"random4", random4_printed()},
  };
  std::vector<DistanceRow> rows;
  for (auto method : {Implementation::kNaimark, Implementation::kPostselection}) {
    for (const auto& [name, effects] : ideal) {
      rows.push_back({name, method_name(method),
                      operational_distance(effects, *hardware_reconstruction(name, method))});
    }
  }
  return rows;
}

}  // namespace povmsim
