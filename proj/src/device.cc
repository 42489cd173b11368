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

#include "povmsim/device.h"

#include <algorithm>

#include "povmsim/error.h"
#include "povmsim/random.h"

namespace povmsim {

namespace {

Matrix pauli(int k) {
  switch (k) {
    case 1:
      return pauli_x();
    case 2:
      return pauli_y();
    case 3:
      return pauli_z();
    default:
      return Matrix::Identity(2, 2);
  }
}

}  // namespace

std::optional<NoiseModel> NoiseModel::preset(std::string_view name) {
  if (name == "ideal") return NoiseModel::ideal();
  if (name == "ibmx4-like") return NoiseModel{0.05, 0.001, 0.02};
  return std::nullopt;
}

std::vector<std::string> NoiseModel::preset_names() { return {"ideal", "ibmx4-like"}; }

void NoiseModel::validate() const {
  for (double p : {cnot, su2, readout_bias}) {
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("noise parameters must lie in [0, 1]");
  }
}

Matrix depolarize(const Matrix& rho, double p, std::span<const int> qubits, int num_qubits) {
  if (p == 0.0) return rho;
  const int k = static_cast<int>(qubits.size());
  Matrix twirled = Matrix::Zero(rho.rows(), rho.cols());
  const int strings = 1 << (2 * k);
  for (int s = 0; s < strings; ++s) {
    Matrix op = Matrix::Identity(1, 1);
    for (int q = 0; q < num_qubits; ++q) {
      const auto it = std::find(qubits.begin(), qubits.end(), q);
      const int which = it == qubits.end() ? 0 : (s >> (2 * static_cast<int>(it - qubits.begin()))) & 3;
      op = kron(op, pauli(which));
    }
    twirled += op * rho * op.adjoint();
  }
  twirled /= static_cast<double>(strings);
  return (1.0 - p) * rho + p * twirled;
}

Matrix evolve(const Circuit& circuit, const QuantumState& input, const NoiseModel& noise) {
  noise.validate();
  if (input.dim() != circuit.dim()) throw DimensionError("evolve: state does not match the register");
  Matrix rho = input.density_matrix();
  for (const auto& gate : circuit.gates()) {
    const Matrix g = gate_matrix(gate, circuit.num_qubits());
    rho = g * rho * g.adjoint();
    const double p = std::holds_alternative<CnotGate>(gate) ? noise.cnot : noise.su2;
    const std::vector<int> qubits = gate_qubits(gate);
    rho = depolarize(rho, p, qubits, circuit.num_qubits());
  }
  return rho;
}

std::vector<double> apply_readout_bias(std::span<const double> p, int num_qubits, double bias) {
  std::vector<double> out(p.begin(), p.end());
  for (int q = 0; q < num_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (num_qubits - 1 - q);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (k & bit) {
        const double moved = bias * out[k];
        out[k] -= moved;
        out[k ^ bit] += moved;
      }
    }
  }
  return out;
}

std::vector<double> outcome_distribution(const Circuit& circuit, const QuantumState& input,
                                         const NoiseModel& noise) {
  const Matrix rho = evolve(circuit, input, noise);
  std::vector<double> p(static_cast<std::size_t>(rho.rows()));
  for (Index k = 0; k < rho.rows(); ++k) p[static_cast<std::size_t>(k)] = std::max(0.0, rho(k, k).real());
  return apply_readout_bias(p, circuit.num_qubits(), noise.readout_bias);
}

ShotRecord run_shots(const Circuit& circuit, const QuantumState& input, const NoiseModel& noise,
                     std::size_t shots, std::uint64_t seed) {
  const std::vector<double> p = outcome_distribution(circuit, input, noise);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) cdf[k] = acc += p[k];

  ShotRecord record;
  record.seed = seed;
  record.num_labels = p.size();
  record.outcomes.reserve(shots);
  Rng rng(seed);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    record.outcomes.push_back(static_cast<std::uint32_t>(std::min(k, p.size() - 1)));
  }
  return record;
}

}  // namespace povmsim
