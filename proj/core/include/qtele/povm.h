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

#ifndef QTELE_POVM_H_
#define QTELE_POVM_H_

#include <array>
#include <string>
#include <vector>

#include "qtele/qstate.h"
#include "qtele/rng.h"
#include "qtele/tolerances.h"

namespace qtele {

// Real, strictly positive amplitudes of the four-particle channel
//   alpha|0000> + beta|1001> + gamma|0110> + delta|1111>.
class ChannelParams {
 public:
  // Throws InvariantError unless the squares sum to 1 within kEpsNorm, and
  // DegenerateChannelError when a coefficient is below kEpsCoef.
  ChannelParams(double alpha, double beta, double gamma, double delta);

  // Skips validation. Only for limiting-case checks in tests.
  static ChannelParams unchecked(double alpha, double beta, double gamma, double delta);
  static ChannelParams uniform() { return ChannelParams(0.5, 0.5, 0.5, 0.5); }

  double alpha() const { return c_[0]; }
  double beta() const { return c_[1]; }
  double gamma() const { return c_[2]; }
  double delta() const { return c_[3]; }
  // (alpha, beta, gamma, delta); index j is also the two-qubit ket |j> the
  // coefficient sits on in Bob's and the ancilla registers.
  const std::array<double, 4>& coefficients() const { return c_; }

 private:
  struct NoCheck {};
  ChannelParams(NoCheck, std::array<double, 4> c) : c_(c) {}

  std::array<double, 4> c_;
};

// Sign patterns of the four discrimination states, in element order.
inline constexpr std::array<std::array<int, 4>, 4> kDiscriminationSigns = {{
    {+1, +1, +1, +1},
    {+1, +1, -1, -1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
}};

inline constexpr std::size_t kNumPovmElements = 5;
inline constexpr int kInconclusiveIndex = 5;

struct PovmSet {
  // P_1..P_4 = |Psi_i><Psi_i| / x, P_5 = I - sum of the others.
  std::array<DenseOperator, kNumPovmElements> elements;
  // sqrt(P_m), used for post-measurement states.
  std::array<DenseOperator, kNumPovmElements> kraus;
  // Short human-readable description of each element.
  std::array<std::string, kNumPovmElements> names;
  // Psi_1..Psi_4 on the ancilla labels (A, B).
  std::array<StateVector, 4> discrimination;
  double x;
};

struct PsdCheck {
  bool psd;
  double min_eigenvalue;
};

struct PovmOutcome {
  int index;  // 1..5
  StateVector post;
  double probability;
};

// Psi_1..Psi_4: normalized (s_0/alpha, s_1/beta, s_2/gamma, s_3/delta) over
// the ancilla pair (first, second), with signs from kDiscriminationSigns.
std::array<StateVector, 4> discrimination_states(const ChannelParams& channel,
                                                 Label first = "A", Label second = "B");

// sum_i |Psi_i><Psi_i|.
DenseOperator discrimination_sum(const ChannelParams& channel);

// Smallest x keeping P_5 positive semidefinite: the largest eigenvalue of
// discrimination_sum(). Always in [1, 4].
double min_x(const ChannelParams& channel);

// Throws InvariantError when `op` is not Hermitian within kEpsNorm.
PsdCheck is_psd(const DenseOperator& op, double tol = kEpsPsd);

// Throws PositivityError (carrying P_5's lowest eigenvalue) when x is below
// the admissible minimum.
PovmSet build_povm(const ChannelParams& channel, double x);

// p_m = <psi|P_m|psi> with the POVM acting on `targets`.
std::array<double, kNumPovmElements> povm_probabilities(const StateVector& state,
                                                        const PovmSet& povm,
                                                        const std::vector<Label>& targets);

// Unnormalized sqrt(P_index)|psi>, index in 1..5.
StateVector povm_branch(const StateVector& state, const PovmSet& povm,
                        const std::vector<Label>& targets, int index);

PovmOutcome povm_sample(const StateVector& state, const PovmSet& povm,
                        const std::vector<Label>& targets, Rng& rng);

// Two-qubit form: the POVM acts on the whole state.
PovmOutcome povm_sample(const StateVector& state_ab, const PovmSet& povm, Rng& rng);

}  // namespace qtele

#endif  // QTELE_POVM_H_
