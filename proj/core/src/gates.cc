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

#include "qtele/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qtele/errors.h"
#include "qtele/tolerances.h"

namespace qtele {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct Branches {
  std::array<StateVector, 4> states;
  std::array<double, 4> probabilities;
};

Branches all_bell_branches(const StateVector& state, const Label& q_i, const Label& q_j) {
  if (q_i == q_j) {
    throw LabelError("Bell measurement needs two distinct qubits");
  }
  auto branch = [&](BellKind k) { return bell_branch(state, q_i, q_j, k); };
  Branches out{{branch(BellKind::kPhiPlus), branch(BellKind::kPsiPlus),
                branch(BellKind::kPhiMinus), branch(BellKind::kPsiMinus)},
               {}};
  for (std::size_t k = 0; k < 4; ++k) {
    double n = out.states[k].norm();
    out.probabilities[k] = n * n;
  }
  return out;
}

std::size_t draw_branch(const Branches& branches, Rng& rng) {
  std::size_t k = sample_index(branches.probabilities, rng);
  if (branches.probabilities[k] < kEpsZero * kEpsZero) {
    throw std::logic_error("Bell measurement selected a zero-probability branch");
  }
  return k;
}

}  // namespace

BellOutcome BellOutcome::from_bits(unsigned bits) {
  if (bits > 3) {
    throw std::invalid_argument("Bell outcome bits must be in 0..3");
  }
  return BellOutcome(static_cast<BellKind>(bits));
}

std::string_view BellOutcome::name() const {
  switch (kind_) {
    case BellKind::kPhiPlus:
      return "Phi+";
    case BellKind::kPsiPlus:
      return "Psi+";
    case BellKind::kPhiMinus:
      return "Phi-";
    case BellKind::kPsiMinus:
      return "Psi-";
  }
  return "?";
}

std::string BellOutcome::bit_string() const {
  return std::string{static_cast<char>('0' + (bits() >> 1)), static_cast<char>('0' + (bits() & 1))};
}

StateVector bell_state(BellKind kind, Label first, Label second) {
  std::vector<Complex> amps(4);
  switch (kind) {
    case BellKind::kPhiPlus:
      amps = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
      break;
    case BellKind::kPhiMinus:
      amps = {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
      break;
    case BellKind::kPsiPlus:
      amps = {0.0, kInvSqrt2, kInvSqrt2, 0.0};
      break;
    case BellKind::kPsiMinus:
      amps = {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
      break;
  }
  return StateVector({std::move(first), std::move(second)}, std::move(amps));
}

DenseOperator standard_gate(std::string_view name) {
  if (name == "I") return DenseOperator::identity(1);
  if (name == "X") return DenseOperator::unitary(1, {0.0, 1.0, 1.0, 0.0});
  if (name == "Z") return DenseOperator::unitary(1, {1.0, 0.0, 0.0, -1.0});
  if (name == "H") {
    return DenseOperator::unitary(1, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
  }
  if (name == "CNOT") {
    return DenseOperator::unitary(2, {1.0, 0.0, 0.0, 0.0,  //
                                      0.0, 1.0, 0.0, 0.0,  //
                                      0.0, 0.0, 0.0, 1.0,  //
                                      0.0, 0.0, 1.0, 0.0});
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

DenseOperator pauli(char name) {
  switch (name) {
    case 'I':
    case 'X':
    case 'Z':
      return standard_gate(std::string_view(&name, 1));
    case 'Y':
      return DenseOperator::unitary(1, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
    default:
      throw std::invalid_argument(std::string("unknown Pauli '") + name + "'");
  }
}

DenseOperator pauli_string(std::string_view names) {
  if (names.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  DenseOperator out = pauli(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) out = DenseOperator::kron(out, pauli(names[i]));
  return out;
}

StateVector bell_branch(const StateVector& state, const Label& q_i, const Label& q_j,
                        BellKind kind) {
  return partial_inner(bell_state(kind, q_i, q_j), state);
}

BellMeasurement bell_measure(const StateVector& state, const Label& q_i, const Label& q_j,
                             Rng& rng) {
  Branches branches = all_bell_branches(state, q_i, q_j);
  std::size_t k = draw_branch(branches, rng);
  return {BellOutcome::from_bits(static_cast<unsigned>(k)), normalize(branches.states[k]).state,
          branches.probabilities[k]};
}

BellMeasurement bell_measure_retained(const StateVector& state, const Label& q_i,
                                      const Label& q_j, Rng& rng) {
  Branches branches = all_bell_branches(state, q_i, q_j);
  std::size_t k = draw_branch(branches, rng);
  BellKind kind = static_cast<BellKind>(k);
  StateVector rest = normalize(branches.states[k]).state;
  StateVector joined = tensor(bell_state(kind, q_i, q_j), rest);
  return {BellOutcome(kind), permuted(joined, state.labels()), branches.probabilities[k]};
}

ComputationalMeasurement measure_computational(const StateVector& state, const Label& qubit,
                                               Rng& rng) {
  std::array<StateVector, 2> branches = {partial_inner(StateVector::basis({qubit}, 0), state),
                                         partial_inner(StateVector::basis({qubit}, 1), state)};
  std::array<double, 2> probs{};
  for (std::size_t b = 0; b < 2; ++b) {
    double n = branches[b].norm();
    probs[b] = n * n;
  }
  std::size_t b = sample_index(probs, rng);
  return {static_cast<int>(b), normalize(branches[b]).state, probs[b]};
}

DenseOperator pauli_correction(unsigned bits) {
  switch (bits) {
    case 0b00:
      return standard_gate("I");
    case 0b01:
      return standard_gate("X");
    case 0b10:
      return standard_gate("Z");
    case 0b11:
      return standard_gate("Z") * standard_gate("X");
    default:
      throw std::invalid_argument("correction bits must be in 0..3");
  }
}

}  // namespace qtele
