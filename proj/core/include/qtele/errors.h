// Copyright 2026 The qtele Authors
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

#ifndef QTELE_ERRORS_H_
#define QTELE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qtele {

// Bad qubit labels: collisions, unknown labels, arity mismatches.
class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state whose norm fell below kEpsZero; signals an impossible branch.
class ZeroNormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input that violates a domain invariant (normalization, Hermiticity, ...).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Channel coefficient at or below kEpsCoef.
class DegenerateChannelError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// A POVM element would have a negative eigenvalue beyond kEpsPsd.
class PositivityError : public std::domain_error {
 public:
  PositivityError(const std::string& what, double min_eigenvalue)
      : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace qtele

#endif  // QTELE_ERRORS_H_
