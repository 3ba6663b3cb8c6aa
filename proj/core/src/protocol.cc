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

#include "qtele/protocol.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qtele/errors.h"
#include "qtele/recovery_table.h"
#include "qtele/tolerances.h"

namespace qtele {
namespace {

const std::vector<Label> kBobWithAncilla = {"5", "6", "A", "B"};

StateVector channel_state(const ChannelParams& channel) {
  const auto& c = channel.coefficients();
  std::vector<Complex> amps(16);
  amps[0b0000] = c[0];
  amps[0b1001] = c[1];
  amps[0b0110] = c[2];
  amps[0b1111] = c[3];
  return StateVector(kChannelLabels, std::move(amps));
}

}  // namespace

InputState::InputState(Complex a, Complex b, Complex c, Complex d) : c_{a, b, c, d} {
  double sum = 0.0;
  for (const Complex& v : c_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvariantError("input coefficients must be finite");
    }
    sum += std::norm(v);
  }
  if (std::abs(sum - 1.0) > kEpsNorm) {
    throw InvariantError("input coefficients are not normalized");
  }
}

InputState InputState::unchecked(Complex a, Complex b, Complex c, Complex d) {
  return InputState(NoCheck{}, {a, b, c, d});
}

InputState InputState::haar_random(Rng& rng) {
  StateVector s = haar_random_state(kInputLabels, rng);
  return InputState(NoCheck{}, {s[0], s[1], s[2], s[3]});
}

StateVector InputState::as_state(const std::vector<Label>& labels) const {
  return StateVector(labels, {c_[0], c_[1], c_[2], c_[3]});
}

double fidelity(const StateVector& state, const StateVector& reference) {
  if (state.num_qubits() != reference.num_qubits()) {
    throw LabelError("fidelity needs states of equal qubit count");
  }
  Complex overlap{};
  for (std::size_t i = 0; i < state.dim(); ++i) overlap += std::conj(reference[i]) * state[i];
  return std::norm(overlap);
}

SingleTeleport teleport_single(const StateVector& input, Rng& rng) {
  if (input.num_qubits() != 1) {
    throw LabelError("teleport_single needs a single-qubit input");
  }
  if (std::abs(input.norm() - 1.0) > kEpsNorm) {
    throw InvariantError("teleport_single needs a unit-norm input");
  }
  const Label in = "in";
  const Label alice = "alice";
  const Label bob = "bob";
  StateVector state = tensor(input.relabeled({in}), bell_state(BellKind::kPhiPlus, alice, bob));
  state = apply_gate(state, standard_gate("CNOT"), {in, alice});
  state = apply_gate(state, standard_gate("H"), {in});
  ComputationalMeasurement first = measure_computational(state, in, rng);
  ComputationalMeasurement second = measure_computational(first.post, alice, rng);
  unsigned bits = (static_cast<unsigned>(first.bit) << 1) | static_cast<unsigned>(second.bit);
  StateVector recovered = apply_gate(second.post, pauli_correction(bits), {bob});
  return {bits, recovered.relabeled(input.labels())};
}

StateVector prepare_world(const InputState& input, const ChannelParams& channel) {
  return tensor(input.as_state(), channel_state(channel));
}

AliceMeasurement alice_measure(const StateVector& world, Rng& rng) {
  BellMeasurement m23 = bell_measure(world, "2", "3", rng);
  BellMeasurement m14 = bell_measure(m23.post, "1", "4", rng);
  return {m23.outcome, m14.outcome, permuted(m14.post, kBobLabels),
          m23.probability * m14.probability};
}

AliceMeasurement alice_branch(const StateVector& world, BellKind bell_23, BellKind bell_14) {
  StateVector projected = bell_branch(bell_branch(world, "2", "3", bell_23), "1", "4", bell_14);
  Normalized n = normalize(permuted(projected, kBobLabels));
  return {BellOutcome(bell_23), BellOutcome(bell_14), std::move(n.state), n.norm * n.norm};
}

StateVector bob_entangle_ancilla(const StateVector& state56) {
  StateVector s = tensor(permuted(state56, kBobLabels), StateVector::basis(kAncillaLabels, 0));
  const DenseOperator cnot = standard_gate("CNOT");
  s = apply_gate(s, cnot, {"5", "A"});
  s = apply_gate(s, cnot, {"6", "B"});
  return s;
}

StateVector recover_conclusive(const StateVector& state56ab, const PovmSet& povm,
                               BellKind bell_23, BellKind bell_14, int povm_index) {
  if (povm_index < 1 || povm_index > 4) {
    throw std::invalid_argument("recover_conclusive needs a POVM index in 1..4");
  }
  StateVector post = povm_branch(state56ab, povm, kAncillaLabels, povm_index);
  // A conclusive Kraus operator is proportional to |Psi_i><Psi_i|, so the
  // ancillas factor out as Psi_i; contracting with it leaves Bob's pair.
  const StateVector& ancilla_bra = povm.discrimination[static_cast<std::size_t>(povm_index - 1)];
  StateVector pair = normalize(partial_inner(ancilla_bra, permuted(post, kBobWithAncilla))).state;
  return apply_gate(pair, recovery_operator(bell_23, bell_14, povm_index), kBobLabels);
}

TeleportResult bob_discriminate_and_recover(const StateVector& state56ab, const PovmSet& povm,
                                            BellOutcome bell_23, BellOutcome bell_14,
                                            const InputState& input, Rng& rng) {
  PovmOutcome outcome = povm_sample(state56ab, povm, kAncillaLabels, rng);
  TeleportResult result{bell_23, bell_14, outcome.index, outcome.index != kInconclusiveIndex,
                        std::nullopt, std::nullopt, outcome.probability};
  if (result.conclusive) {
    StateVector recovered =
        recover_conclusive(state56ab, povm, bell_23.kind(), bell_14.kind(), outcome.index);
    result.fidelity = fidelity(recovered, input.as_state(kBobLabels));
    result.recovered = std::move(recovered);
  }
  return result;
}

TeleportResult bob_discriminate_and_recover(const StateVector& state56ab,
                                            const ChannelParams& channel, double x,
                                            BellOutcome bell_23, BellOutcome bell_14,
                                            const InputState& input, Rng& rng) {
  return bob_discriminate_and_recover(state56ab, build_povm(channel, x), bell_23, bell_14, input,
                                      rng);
}

double exact_success_probability(const InputState& input, const ChannelParams& channel, double x) {
  PovmSet povm = build_povm(channel, x);
  StateVector world = prepare_world(input, channel);
  double total = 0.0;
  for (BellKind b23 : kAllBellKinds) {
    for (BellKind b14 : kAllBellKinds) {
      AliceMeasurement alice = alice_branch(world, b23, b14);
      auto p = povm_probabilities(bob_entangle_ancilla(alice.bob_state), povm, kAncillaLabels);
      total += alice.branch_probability * (p[0] + p[1] + p[2] + p[3]);
    }
  }
  return total;
}

RunStatistics run_teleportation(const InputState& input, const ChannelParams& channel,
                                std::optional<double> x, std::uint64_t trials,
                                std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("run_teleportation needs at least one trial");
  }
  double x_used = x.has_value() ? *x : min_x(channel);
  PovmSet povm = build_povm(channel, x_used);
  StateVector world = prepare_world(input, channel);

  std::uint64_t conclusive = 0;
  double fidelity_sum = 0.0;
  double fidelity_min = std::numeric_limits<double>::quiet_NaN();
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_stream(seed, t);
    AliceMeasurement alice = alice_measure(world, rng);
    TeleportResult r = bob_discriminate_and_recover(bob_entangle_ancilla(alice.bob_state), povm,
                                                    alice.bell_23, alice.bell_14, input, rng);
    if (r.conclusive) {
      ++conclusive;
      fidelity_sum += *r.fidelity;
      fidelity_min = conclusive == 1 ? *r.fidelity : std::min(fidelity_min, *r.fidelity);
    }
  }
  double mean = conclusive > 0 ? fidelity_sum / static_cast<double>(conclusive)
                               : std::numeric_limits<double>::quiet_NaN();
  return {trials,
          conclusive,
          static_cast<double>(conclusive) / static_cast<double>(trials),
          mean,
          fidelity_min,
          exact_success_probability(input, channel, x_used),
          x_used,
          seed};
}

}  // namespace qtele
