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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace povmsim {

/// Outcome stream of a sampler. Labels are 0-based; `fail_label`, when
/// set, marks runs rejected by postselection.
struct ShotRecord {
  std::uint64_t seed = 0;
  std::size_t num_labels = 0;
  std::optional<std::uint32_t> fail_label;
  std::vector<std::uint32_t> outcomes;

  std::size_t shots() const { return outcomes.size(); }
  std::vector<std::uint64_t> counts() const;
  std::uint64_t successes() const;
  double success_rate() const;
  /// Frequencies over the non-fail labels, normalized by successes().
  std::vector<double> conditional_frequencies() const;

  /// Concatenation; associative. Both records must share the label set.
  static ShotRecord merge(const ShotRecord& a, const ShotRecord& b);
};

/// CSV with columns shot,outcome. The fail label is written as "fail".
void write_shot_csv(std::ostream& out, const ShotRecord& record);

}  // namespace povmsim
