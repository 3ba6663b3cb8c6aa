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

#ifndef QTELE_LINALG_H_
#define QTELE_LINALG_H_

#include <vector>

#include "qtele/qstate.h"

namespace qtele {

// Eigendecomposition of a Hermitian operator. `values` are ascending and
// column j of `vectors` is the eigenvector for values[j].
struct HermitianEigen {
  std::vector<double> values;
  DenseOperator vectors;
};

// Cyclic complex Jacobi. Deterministic, and accurate to a few ulps of the
// matrix norm for the small (<= 16x16) operators used here. Throws
// InvariantError when `op` is not Hermitian within kEpsNorm.
HermitianEigen hermitian_eigen(const DenseOperator& op);

// Spectral square root of a positive semidefinite operator. Eigenvalues in
// (-kEpsPsd, 0) are clamped to zero; anything lower throws PositivityError.
DenseOperator sqrt_psd(const DenseOperator& op);

}  // namespace qtele

#endif  // QTELE_LINALG_H_
