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

#include "povmsim/error.h"

#include <sstream>

namespace povmsim {

namespace {

std::string describe(const std::string& invariant, double magnitude, double tolerance) {
  std::ostringstream out;
  out << "invariant '" << invariant << "' violated: deviation " << magnitude
      << " exceeds tolerance " << tolerance;
  return out.str();
}

}  // namespace

InvariantError::InvariantError(std::string invariant, double magnitude, double tolerance)
    : Error(describe(invariant, magnitude, tolerance)),
      invariant_(std::move(invariant)),
      magnitude_(magnitude),
      tolerance_(tolerance) {}

}  // namespace povmsim
