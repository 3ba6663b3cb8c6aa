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

#include "qtele/recovery_table.h"

#include <stdexcept>

namespace qtele {

// clang-format off
const std::array<std::string_view, 64> kRecoveryTable = {
    // bell_23 = Phi+
    "II", "ZI", "IZ", "ZZ", "XI", "YI", "XZ", "YZ",
    "ZI", "II", "ZZ", "IZ", "YI", "XI", "YZ", "XZ",
    // bell_23 = Psi+
    "IX", "ZX", "IY", "ZY", "XX", "YX", "XY", "YY",
    "ZX", "IX", "ZY", "IY", "YX", "XX", "YY", "XY",
    // bell_23 = Phi-
    "IZ", "ZZ", "II", "ZI", "XZ", "YZ", "XI", "YI",
    "ZZ", "IZ", "ZI", "II", "YZ", "XZ", "YI", "XI",
    // bell_23 = Psi-
    "IY", "ZY", "IX", "ZX", "XY", "YY", "XX", "YX",
    "ZY", "IY", "ZX", "IX", "YY", "XY", "YX", "XX",
};
// clang-format on

std::size_t recovery_table_slot(BellKind bell_23, BellKind bell_14, int povm_index) {
  if (povm_index < 1 || povm_index > 4) {
    throw std::invalid_argument("recovery needs a conclusive POVM index in 1..4");
  }
  return (static_cast<std::size_t>(bell_23) * 4 + static_cast<std::size_t>(bell_14)) * 4 +
         static_cast<std::size_t>(povm_index - 1);
}

std::string_view recovery_pauli(BellKind bell_23, BellKind bell_14, int povm_index) {
  return kRecoveryTable[recovery_table_slot(bell_23, bell_14, povm_index)];
}

DenseOperator recovery_operator(BellKind bell_23, BellKind bell_14, int povm_index) {
  return pauli_string(recovery_pauli(bell_23, bell_14, povm_index));
}

}  // namespace qtele
