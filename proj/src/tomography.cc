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

#include "povmsim/tomography.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>

#include "povmsim/born.h"
#include "povmsim/error.h"
#include "povmsim/tolerance.h"

namespace povmsim {

namespace {

constexpr std::size_t kMaxDistanceOutcomes = 20;

}  // namespace

const std::array<NamedState, kNumProbes>& tomography_probes() {
  static const std::array<NamedState, kNumProbes> probes = {
      NamedState{"zero", *named_qubit_state("zero")},
      NamedState{"one", *named_qubit_state("one")},
      NamedState{"plus", *named_qubit_state("plus")},
      NamedState{"plus_i", *named_qubit_state("plus_i")},
  };
  return probes;
}

TomographyRecord TomographyRecord::zeros(std::size_t num_outcomes) {
  TomographyRecord r;
  r.num_outcomes = num_outcomes;
  for (auto& c : r.counts) c.assign(num_outcomes, 0.0);
  return r;
}

double TomographyRecord::accepted(std::size_t probe) const {
  return std::accumulate(counts[probe].begin(), counts[probe].end(), 0.0);
}

std::vector<double> TomographyRecord::frequencies(std::size_t probe) const {
  const double total = accepted(probe);
  if (!(total > 0.0)) throw PreconditionError("probe " + tomography_probes()[probe].name + " has no accepted counts");
  std::vector<double> f = counts[probe];
  for (double& x : f) x /= total;
  return f;
}

double TomographyRecord::acceptance_fraction() const {
  double acc = 0.0;
  double all = 0.0;
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    acc += accepted(p);
    all += total(p);
  }
  return all > 0.0 ? acc / all : 0.0;
}

TomographyRecord exact_record(const EffectList& effects) {
  TomographyRecord r = TomographyRecord::zeros(effects.size());
  for (std::size_t p = 0; p < kNumProbes; ++p) r.counts[p] = born_values(tomography_probes()[p].state, effects);
  return r;
}

BlochVector reconstruct_effect(double p0, double p1, double px, double py) {
  const double alpha = p0 + p1;
  if (!(alpha > 0.0)) throw PreconditionError("reconstruct_effect: outcome never observed (alpha <= 0)");
  return {alpha, {2.0 * px / alpha - 1.0, 2.0 * py / alpha - 1.0, (p0 - p1) / alpha}};
}

Reconstruction reconstruct_povm(const TomographyRecord& record) {
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    if (record.counts[p].size() != record.num_outcomes) {
      throw DimensionError("reconstruct_povm: probe " + tomography_probes()[p].name + " has inconsistent outcomes");
    }
  }
  std::array<std::vector<double>, kNumProbes> f;
  for (std::size_t p = 0; p < kNumProbes; ++p) f[p] = record.frequencies(p);

  Reconstruction out;
  for (std::size_t i = 0; i < record.num_outcomes; ++i) {
    if (f[0][i] + f[1][i] <= 0.0) {
      out.bloch.push_back({});
      out.effects.push_back(Matrix::Zero(2, 2));
      continue;
    }
    const BlochVector b = reconstruct_effect(f[0][i], f[1][i], f[2][i], f[3][i]);
    if (!b.is_physical()) out.unphysical.push_back(i);
    out.bloch.push_back(b);
    out.effects.push_back(b.to_matrix());
  }
  out.completeness_defect = completeness_defect(out.effects);
  return out;
}

double operational_distance(const EffectList& m, const EffectList& n) {
  if (m.empty() || n.empty()) throw DimensionError("operational_distance: empty effect list");
  const Index d = m.front().rows();
  const std::size_t k = std::max(m.size(), n.size());
  if (k > kMaxDistanceOutcomes) throw PreconditionError("operational_distance: more than 20 outcomes");

  std::vector<Matrix> diff(k, Matrix::Zero(d, d));
  for (std::size_t i = 0; i < k; ++i) {
    if (i < m.size()) {
      if (m[i].rows() != d || m[i].cols() != d) throw DimensionError("operational_distance: dimension mismatch");
      diff[i] += m[i];
    }
    if (i < n.size()) {
      if (n[i].rows() != d || n[i].cols() != d) throw DimensionError("operational_distance: dimension mismatch");
      diff[i] -= n[i];
    }
  }

  // For two complete lists the differences sum to zero, so a subset and its
  // complement have the same norm and the last outcome can be left out.
  const double limit = tol::scaled(tol::kSum, d);
  const bool complete = completeness_defect(m) <= limit && completeness_defect(n) <= limit;
  const std::size_t free_bits = complete ? k - 1 : k;

  // Gray-code walk: each step adds or removes one difference.
  Matrix acc = Matrix::Zero(d, d);
  double best = 0.0;
  const std::uint64_t count = std::uint64_t{1} << free_bits;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t gray = step ^ (step >> 1);
    if (gray & (std::uint64_t{1} << bit)) {
      acc += diff[bit];
    } else {
      acc -= diff[bit];
    }
    best = std::max(best, operator_norm(0.5 * (acc + acc.adjoint())));
  }
  return best;
}

double operational_distance(const Povm& m, const Povm& n) {
  if (m.dim() != n.dim()) throw DimensionError("operational_distance: dimension mismatch");
  return operational_distance(m.matrices(), n.matrices());
}

TomographyRecord relabel_register_outcomes(const TomographyRecord& record, std::size_t mask) {
  if (mask >= record.num_outcomes || (record.num_outcomes & (record.num_outcomes - 1)) != 0) {
    throw PreconditionError("relabel_register_outcomes: mask outside a power-of-two register");
  }
  TomographyRecord out = TomographyRecord::zeros(record.num_outcomes);
  out.rejected = record.rejected;
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    for (std::size_t j = 0; j < record.num_outcomes; ++j) out.counts[p][j ^ mask] = record.counts[p][j];
  }
  return out;
}

TomographyRecord average_records(std::span<const TomographyRecord> records) {
  if (records.empty()) throw PreconditionError("average_records: no records");
  const std::size_t k = records.front().num_outcomes;
  const auto weight = 1.0 / static_cast<double>(records.size());
  TomographyRecord out = TomographyRecord::zeros(k);
  for (const auto& r : records) {
    if (r.num_outcomes != k) throw PreconditionError("average_records: outcome count mismatch");
    for (std::size_t p = 0; p < kNumProbes; ++p) {
      if (std::abs(r.total(p) - records.front().total(p)) > 0.5) {
        throw PreconditionError("average_records: shot counts differ between records");
      }
      for (std::size_t j = 0; j < k; ++j) out.counts[p][j] += weight * r.counts[p][j];
      out.rejected[p] += weight * r.rejected[p];
    }
  }
  return out;
}

TomographyRecord bias_mitigated_statistics(std::span<const TomographyRecord> variants) {
  if (variants.empty()) throw PreconditionError("bias_mitigated_statistics: no variants");
  const std::size_t k = variants.front().num_outcomes;
  if (k != 2 && k != 4) throw PreconditionError("bias_mitigated_statistics: register must have 1 or 2 qubits");
  if (variants.size() != k) {
    throw PreconditionError("bias_mitigated_statistics: a " + std::to_string(k) + "-outcome register needs " +
                            std::to_string(k) + " x-gate variants, got " + std::to_string(variants.size()));
  }
  std::vector<TomographyRecord> relabeled;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    if (variants[v].num_outcomes != k) throw PreconditionError("bias_mitigated_statistics: outcome count mismatch");
    relabeled.push_back(relabel_register_outcomes(variants[v], v));
  }
  return average_records(relabeled);
}

void write_tomography_csv(std::ostream& out, const TomographyRecord& record) {
  out << "probe,outcome,count,shots\n";
  out.precision(17);
  for (std::size_t p = 0; p < kNumProbes; ++p) {
    const auto& name = tomography_probes()[p].name;
    for (std::size_t j = 0; j < record.num_outcomes; ++j) {
      out << name << ',' << j + 1 << ',' << record.counts[p][j] << ',' << record.total(p) << '\n';
    }
    if (record.rejected[p] > 0.0) out << name << ",fail," << record.rejected[p] << ',' << record.total(p) << '\n';
  }
}

void write_distance_csv(std::ostream& out, std::span<const DistanceRow> rows) {
  out << "povm,method,distance\n";
  out.precision(6);
  for (const auto& r : rows) out << r.povm << ',' << r.method << ',' << std::fixed << r.distance << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace povmsim
