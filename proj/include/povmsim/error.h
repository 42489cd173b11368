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

#include <stdexcept>
#include <string>

namespace povmsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain object failed one of its invariants. Carries the invariant's
/// name and how far the offending quantity was from the allowed region.
class InvariantError : public Error {
 public:
  InvariantError(std::string invariant, double magnitude, double tolerance);

  const std::string& invariant() const { return invariant_; }
  double magnitude() const { return magnitude_; }
  double tolerance() const { return tolerance_; }

 private:
  std::string invariant_;
  double magnitude_;
  double tolerance_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace povmsim
