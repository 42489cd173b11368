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

#include "povmsim/shot_record.h"

#include <ostream>

#include "povmsim/error.h"

namespace povmsim {

std::vector<std::uint64_t> ShotRecord::counts() const {
  std::vector<std::uint64_t> c(num_labels, 0);
  for (auto o : outcomes) ++c[o];
  return c;
}

std::uint64_t ShotRecord::successes() const {
  if (!fail_label) return outcomes.size();
  std::uint64_t n = 0;
  for (auto o : outcomes) n += (o != *fail_label);
  return n;
}

double ShotRecord::success_rate() const {
  if (outcomes.empty()) return 0.0;
  return static_cast<double>(successes()) / static_cast<double>(outcomes.size());
}

std::vector<double> ShotRecord::conditional_frequencies() const {
  const auto c = counts();
  const double ok = static_cast<double>(successes());
  std::vector<double> f;
  for (std::size_t i = 0; i < num_labels; ++i) {
    if (fail_label && i == *fail_label) continue;
    f.push_back(ok > 0 ? static_cast<double>(c[i]) / ok : 0.0);
  }
  return f;
}

ShotRecord ShotRecord::merge(const ShotRecord& a, const ShotRecord& b) {
  if (a.num_labels != b.num_labels || a.fail_label != b.fail_label) {
    throw DimensionError("ShotRecord::merge: label sets differ");
  }
  ShotRecord out = a;
  out.outcomes.insert(out.outcomes.end(), b.outcomes.begin(), b.outcomes.end());
  return out;
}

void write_shot_csv(std::ostream& out, const ShotRecord& record) {
  out << "shot,outcome\n";
  for (std::size_t s = 0; s < record.outcomes.size(); ++s) {
    out << s << ',';
    if (record.fail_label && record.outcomes[s] == *record.fail_label) {
      out << "fail";
    } else {
      out << record.outcomes[s];
    }
    out << '\n';
  }
}

}  // namespace povmsim
