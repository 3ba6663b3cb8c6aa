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

#ifndef QTELE_GATES_H_
#define QTELE_GATES_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "qtele/qstate.h"
#include "qtele/rng.h"

namespace qtele {

// Bell basis, numbered by the classical two-bit message each outcome sends:
// Phi+ = 00, Psi+ = 01, Phi- = 10, Psi- = 11.
enum class BellKind : std::uint8_t {
  kPhiPlus = 0,
  kPsiPlus = 1,
  kPhiMinus = 2,
  kPsiMinus = 3,
};

inline constexpr std::array<BellKind, 4> kAllBellKinds = {
    BellKind::kPhiPlus, BellKind::kPsiPlus, BellKind::kPhiMinus, BellKind::kPsiMinus};

class BellOutcome {
 public:
  constexpr explicit BellOutcome(BellKind kind) : kind_(kind) {}
  // Throws std::invalid_argument when bits > 3.
  static BellOutcome from_bits(unsigned bits);

  constexpr BellKind kind() const { return kind_; }
  constexpr unsigned bits() const { return static_cast<unsigned>(kind_); }
  // "Phi+", "Psi+", "Phi-", "Psi-".
  std::string_view name() const;
  // "00", "01", "10", "11".
  std::string bit_string() const;

  friend constexpr bool operator==(BellOutcome, BellOutcome) = default;

 private:
  BellKind kind_;
};

// Two-qubit Bell state on labels (first, second).
StateVector bell_state(BellKind kind, Label first = "a", Label second = "b");

// Textbook unitaries: "I", "H", "X", "Z" (one qubit) and "CNOT" (control is
// the first target). Throws std::invalid_argument for other names.
DenseOperator standard_gate(std::string_view name);

// Single-qubit Pauli 'I', 'X', 'Y' or 'Z'.
DenseOperator pauli(char name);
// Two-qubit Pauli string such as "ZX" (first letter acts on the first target).
DenseOperator pauli_string(std::string_view names);

struct BellMeasurement {
  BellOutcome outcome;
  StateVector post;
  double probability;
};

struct ComputationalMeasurement {
  int bit;
  StateVector post;
  double probability;
};

// Unnormalized <Bell_kind|_{q_i q_j} |state>; q_i and q_j are removed.
StateVector bell_branch(const StateVector& state, const Label& q_i, const Label& q_j,
                        BellKind kind);

// Projective Bell measurement of (q_i, q_j). The measured qubits are removed
// from the normalized post-state.
BellMeasurement bell_measure(const StateVector& state, const Label& q_i, const Label& q_j,
                             Rng& rng);

// Same draw as bell_measure, but the post-state keeps the measured pair
// (projected onto the observed Bell state) in its original label order.
BellMeasurement bell_measure_retained(const StateVector& state, const Label& q_i,
                                      const Label& q_j, Rng& rng);

// Z-basis measurement of one qubit, which is removed from the post-state.
ComputationalMeasurement measure_computational(const StateVector& state, const Label& qubit,
                                               Rng& rng);

// Correction Bob applies after receiving `bits` in single-qubit
// teleportation: 00 -> I, 01 -> X, 10 -> Z, 11 -> ZX.
DenseOperator pauli_correction(unsigned bits);

}  // namespace qtele

#endif  // QTELE_GATES_H_
