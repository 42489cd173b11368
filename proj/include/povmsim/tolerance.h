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

#include <Eigen/Core>

// Numerical tolerances shared by every module. The 1e-9 family is scaled
// by the Hilbert-space dimension through scaled().
namespace povmsim::tol {

inline constexpr double kHermitian = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kProjector = 1e-9;
inline constexpr double kSum = 1e-9;
inline constexpr double kNorm = 1e-12;
inline constexpr double kOrthogonal = 1e-9;
inline constexpr double kUnambiguous = 1e-9;
inline constexpr double kIo = 1e-12;
// Relative to the largest singular value of the state matrix.
inline constexpr double kLinearIndependence = 1e-10;

inline double scaled(double base, Eigen::Index dim) {
  return base * static_cast<double>(dim < 1 ? 1 : dim);
}

}  // namespace povmsim::tol
