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

#ifndef QTELE_RECOVERY_TABLE_H_
#define QTELE_RECOVERY_TABLE_H_

#include <array>
#include <string_view>

#include "qtele/gates.h"
#include "qtele/qstate.h"

namespace qtele {

// Two-qubit Pauli Bob applies to particles (5, 6) after Alice reports
// (bell_23, bell_14) and his ancilla POVM returns conclusive index 1..4.
// Each entry is a two-letter string, first letter on particle 5, exact up to
// global phase.
//
// The table is regenerated by exhaustive Pauli search in the test suite and
// must match it entry for entry. Layout: [(bell_23 * 4 + bell_14) * 4 + index - 1].
extern const std::array<std::string_view, 64> kRecoveryTable;

std::size_t recovery_table_slot(BellKind bell_23, BellKind bell_14, int povm_index);

// Throws std::invalid_argument when povm_index is not in 1..4.
std::string_view recovery_pauli(BellKind bell_23, BellKind bell_14, int povm_index);
DenseOperator recovery_operator(BellKind bell_23, BellKind bell_14, int povm_index);

}  // namespace qtele

#endif  // QTELE_RECOVERY_TABLE_H_
