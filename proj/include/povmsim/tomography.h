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

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "povmsim/povm.h"
#include "povmsim/state.h"

namespace povmsim {

inline constexpr std::size_t kNumProbes = 4;

/// |0>, |1>, |x+>, |y+>, in that order.
const std::array<NamedState, kNumProbes>& tomography_probes();

/// Outcome counts per probe. Counts are real so that averaged (mitigated)
/// tables keep their exact values. `rejected` holds postselected-away runs,
/// which do not enter the frequencies.
struct TomographyRecord {
  std::size_t num_outcomes = 0;
  std::array<std::vector<double>, kNumProbes> counts;
  std::array<double, kNumProbes> rejected{};

  static TomographyRecord zeros(std::size_t num_outcomes);

  double accepted(std::size_t probe) const;
  double total(std::size_t probe) const { return accepted(probe) + rejected[probe]; }
  /// Counts of `probe` normalized over accepted runs only.
  std::vector<double> frequencies(std::size_t probe) const;
  /// Accepted runs over all runs, pooled across probes.
  double acceptance_fraction() const;
};

/// Record whose counts are the exact Born values of each probe.
TomographyRecord exact_record(const EffectList& effects);

/// Linear inversion for one outcome from its probe frequencies
/// (p0, p1, px, py): alpha = p0 + p1, n = ((2px - alpha), (2py - alpha),
/// (p0 - p1)) / alpha. Throws PreconditionError when alpha <= 0.
BlochVector reconstruct_effect(double p0, double p1, double px, double py);

struct Reconstruction {
  EffectList effects;
  std::vector<BlochVector> bloch;
  double completeness_defect;
  std::vector<std::size_t> unphysical;  // eigenvalues outside [0, 1]
};

/// Outcomes that never fired reconstruct to the zero effect.
Reconstruction reconstruct_povm(const TomographyRecord& record);

/// max over outcome subsets x of || sum_{i in x} (M_i - N_i) ||. The shorter
/// list is padded with zero effects; at most 20 outcomes.
double operational_distance(const EffectList& m, const EffectList& n);
double operational_distance(const Povm& m, const Povm& n);

/// Moves the counts of register outcome j to j ^ mask.
TomographyRecord relabel_register_outcomes(const TomographyRecord& record, std::size_t mask);

/// Entrywise mean of records with equal outcome sets and per-probe totals.
TomographyRecord average_records(std::span<const TomographyRecord> records);

/// variants[v] was taken with x gates on the register bits set in v, so a
/// 1-qubit readout needs 2 variants and a 2-qubit readout 4. Returns the
/// mean of the relabeled tables.
TomographyRecord bias_mitigated_statistics(std::span<const TomographyRecord> variants);

/// Columns probe, outcome, count, shots; rejected runs use outcome "fail".
void write_tomography_csv(std::ostream& out, const TomographyRecord& record);

struct DistanceRow {
  std::string povm;
  std::string method;
  double distance;
};

/// Columns povm, method, distance.
void write_distance_csv(std::ostream& out, std::span<const DistanceRow> rows);

}  // namespace povmsim
