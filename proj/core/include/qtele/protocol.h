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

#ifndef QTELE_PROTOCOL_H_
#define QTELE_PROTOCOL_H_

#include <array>
#include <cstdint>
#include <optional>

#include "qtele/gates.h"
#include "qtele/povm.h"
#include "qtele/qstate.h"
#include "qtele/rng.h"

namespace qtele {

// Register labels used by the two-particle scheme. Alice holds 1-4, Bob
// holds 5, 6 and the ancillas A, B.
inline const std::vector<Label> kInputLabels = {"1", "2"};
inline const std::vector<Label> kChannelLabels = {"3", "4", "5", "6"};
inline const std::vector<Label> kBobLabels = {"5", "6"};
inline const std::vector<Label> kAncillaLabels = {"A", "B"};

// a|00> + b|01> + c|10> + d|11> on particles (1, 2).
class InputState {
 public:
  // Throws InvariantError unless |a|^2 + |b|^2 + |c|^2 + |d|^2 = 1 within
  // kEpsNorm.
  InputState(Complex a, Complex b, Complex c, Complex d);
  static InputState unchecked(Complex a, Complex b, Complex c, Complex d);
  static InputState haar_random(Rng& rng);

  const std::array<Complex, 4>& coefficients() const { return c_; }
  StateVector as_state(const std::vector<Label>& labels = kInputLabels) const;

 private:
  struct NoCheck {};
  InputState(NoCheck, std::array<Complex, 4> c) : c_(c) {}

  std::array<Complex, 4> c_;
};

struct TeleportResult {
  BellOutcome bell_23;
  BellOutcome bell_14;
  int povm_index;  // 1..5
  bool conclusive;
  std::optional<StateVector> recovered;  // on particles (5, 6)
  std::optional<double> fidelity;
  // Joint probability of the Bell outcomes and the POVM outcome.
  double branch_probability;
};

struct RunStatistics {
  std::uint64_t trials;
  std::uint64_t conclusive_count;
  double conclusive_rate;
  // NaN when no trial was conclusive.
  double mean_conclusive_fidelity;
  double min_conclusive_fidelity;
  double exact_success_probability;
  double x_used;
  std::uint64_t seed;
};

struct SingleTeleport {
  unsigned bits;  // (input qubit, Alice's EPR half)
  StateVector recovered;
};

struct AliceMeasurement {
  BellOutcome bell_23;
  BellOutcome bell_14;
  StateVector bob_state;  // normalized, on (5, 6)
  double branch_probability;
};

// |<reference|state>|^2. Labels are ignored; qubit counts must match.
double fidelity(const StateVector& state, const StateVector& reference);

// Standard three-qubit teleportation of one qubit through a Phi+ pair.
SingleTeleport teleport_single(const StateVector& input, Rng& rng);

// |input>_12 (x) |channel>_3456.
StateVector prepare_world(const InputState& input, const ChannelParams& channel);

// Bell measurements on (2, 3) then (1, 4).
AliceMeasurement alice_measure(const StateVector& world, Rng& rng);

// Alice's result conditioned on a fixed pair of outcomes. Throws
// ZeroNormError when the branch has zero probability.
AliceMeasurement alice_branch(const StateVector& world, BellKind bell_23, BellKind bell_14);

// Appends ancillas (A, B) in |00> and applies CNOT(5 -> A), CNOT(6 -> B).
StateVector bob_entangle_ancilla(const StateVector& state56);

// Samples the ancilla POVM and, on a conclusive index, applies the recovery
// Pauli to (5, 6). Fidelity is measured against `input`.
TeleportResult bob_discriminate_and_recover(const StateVector& state56ab, const PovmSet& povm,
                                            BellOutcome bell_23, BellOutcome bell_14,
                                            const InputState& input, Rng& rng);

// Builds the POVM for (channel, x) first; throws PositivityError when x is
// below min_x(channel).
TeleportResult bob_discriminate_and_recover(const StateVector& state56ab,
                                            const ChannelParams& channel, double x,
                                            BellOutcome bell_23, BellOutcome bell_14,
                                            const InputState& input, Rng& rng);

// Deterministic recovery for a fixed POVM index (1..4): project the ancillas
// and apply the table Pauli. Returns the normalized (5, 6) state.
StateVector recover_conclusive(const StateVector& state56ab, const PovmSet& povm,
                               BellKind bell_23, BellKind bell_14, int povm_index);

// Sum over the 16 Bell branches and the four conclusive POVM outcomes of
// branch probability times conditional outcome probability.
double exact_success_probability(const InputState& input, const ChannelParams& channel, double x);

// Monte Carlo run. `x` empty means "auto" (min_x). Trial t draws from
// Rng::for_stream(seed, t), so results do not depend on scheduling.
RunStatistics run_teleportation(const InputState& input, const ChannelParams& channel,
                                std::optional<double> x, std::uint64_t trials,
                                std::uint64_t seed);

}  // namespace qtele

#endif  // QTELE_PROTOCOL_H_
