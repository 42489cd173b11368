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

#include "povmsim/io.h"

#include <fstream>

#include "povmsim/error.h"
#include "povmsim/postselection.h"

namespace povmsim {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("'dim' must be a positive integer");
  return static_cast<Index>(d.get<long long>());
}

void check_square(const Matrix& m, Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string(what) + ": matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
  }
}

std::vector<std::string> labels_field(const Json& j) {
  if (!j.contains("labels")) return {};
  try {
    return j.at("labels").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("'labels': ") + e.what());
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw ParseError("matrix rows differ in length");
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a non-empty array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json povm_to_json(const Povm& povm) { return effects_to_json(povm.matrices(), povm.labels()); }

Povm povm_from_json(const Json& j) {
  return Povm::from_effects(effects_from_json(j), labels_field(j));
}

Json effects_to_json(const EffectList& effects, const std::vector<std::string>& labels) {
  if (effects.empty()) throw DimensionError("effects_to_json: empty list");
  Json out;
  out["dim"] = effects.front().rows();
  out["effects"] = Json::array();
  for (const auto& e : effects) out["effects"].push_back(matrix_to_json(e));
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

EffectList effects_from_json(const Json& j) {
  const Index dim = dim_field(j);
  const Json& list = field(j, "effects");
  if (!list.is_array() || list.empty()) throw ParseError("'effects' must be a non-empty array");
  EffectList effects;
  for (const auto& e : list) {
    effects.push_back(matrix_from_json(e));
    check_square(effects.back(), dim, "effect");
  }
  const auto labels = labels_field(j);
  if (!labels.empty() && labels.size() != effects.size()) throw ParseError("'labels' and 'effects' differ in length");
  return effects;
}

Json state_to_json(const QuantumState& state) {
  Json out;
  out["dim"] = state.dim();
  if (state.is_pure_form()) {
    out["vector"] = vector_to_json(state.vector());
  } else {
    out["density"] = matrix_to_json(state.density_matrix());
  }
  return out;
}

QuantumState state_from_json(const Json& j) {
  const Index dim = dim_field(j);
  if (j.contains("vector")) {
    Vector v = vector_from_json(j.at("vector"));
    if (v.size() != dim) throw DimensionError("state vector length differs from 'dim'");
    return QuantumState::pure(std::move(v));
  }
  Matrix rho = matrix_from_json(field(j, "density"));
  check_square(rho, dim, "density");
  return QuantumState::density(std::move(rho));
}

Json ensemble_to_json(const Ensemble& ensemble) {
  Json out;
  out["states"] = Json::array();
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    out["states"].push_back(state_to_json(QuantumState::pure(ensemble.state(i))));
  }
  out["probs"] = ensemble.probs();
  return out;
}

Ensemble ensemble_from_json(const Json& j) {
  const Json& states = field(j, "states");
  if (!states.is_array()) throw ParseError("'states' must be an array");
  std::vector<Vector> vectors;
  for (const auto& s : states) {
    QuantumState state = state_from_json(s);
    if (!state.is_pure_form()) throw ParseError("ensemble states must be pure");
    vectors.push_back(state.vector());
  }
  std::vector<double> probs;
  try {
    probs = field(j, "probs").get<std::vector<double>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("'probs': ") + e.what());
  }
  return Ensemble::from_states(std::move(vectors), std::move(probs));
}

Json unitary_to_json(const Matrix& u) {
  Json out;
  out["dim"] = u.rows();
  out["matrix"] = matrix_to_json(u);
  return out;
}

Json scheme_to_json(const PostselectionScheme& scheme) {
  Json out;
  out["target"] = povm_to_json(scheme.target());
  out["success_probability"] = scheme.success_probability();
  out["failure_label"] = "fail";
  Json components = Json::array();
  for (const auto& c : scheme.components()) {
    Json item;
    item["weight"] = c.weight;
    item["psi"] = vector_to_json(c.psi);
    item["relabel"] = {{"+", scheme.target().labels()[c.parent]}, {"-", "fail"}};
    components.push_back(std::move(item));
  }
  out["components"] = std::move(components);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace povmsim
