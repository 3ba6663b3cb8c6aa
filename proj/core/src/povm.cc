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

#include "qtele/povm.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qtele/errors.h"
#include "qtele/linalg.h"
#include "qtele/tolerances.h"

namespace qtele {

ChannelParams::ChannelParams(double alpha, double beta, double gamma, double delta)
    : c_{alpha, beta, gamma, delta} {
  double sum = 0.0;
  for (double v : c_) {
    if (!std::isfinite(v)) {
      throw InvariantError("channel coefficients must be finite");
    }
    sum += v * v;
  }
  for (double v : c_) {
    if (v < kEpsCoef) {
      std::ostringstream msg;
      msg << "channel coefficient " << v << " is not strictly positive";
      throw DegenerateChannelError(msg.str());
    }
  }
  if (std::abs(sum - 1.0) > kEpsNorm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "channel coefficients are not normalized (sum of squares = " << sum << ")";
    throw InvariantError(msg.str());
  }
}

ChannelParams ChannelParams::unchecked(double alpha, double beta, double gamma, double delta) {
  return ChannelParams(NoCheck{}, {alpha, beta, gamma, delta});
}

std::array<StateVector, 4> discrimination_states(const ChannelParams& channel, Label first,
                                                 Label second) {
  const auto& c = channel.coefficients();
  double inv_norm_sq = 0.0;
  for (double v : c) {
    if (v < kEpsCoef) {
      throw DegenerateChannelError("discrimination states need strictly positive coefficients");
    }
    inv_norm_sq += 1.0 / (v * v);
  }
  double scale = 1.0 / std::sqrt(inv_norm_sq);
  auto make = [&](const std::array<int, 4>& signs) {
    std::vector<Complex> amps(4);
    for (std::size_t j = 0; j < 4; ++j) amps[j] = signs[j] * scale / c[j];
    return StateVector({first, second}, std::move(amps));
  };
  return {make(kDiscriminationSigns[0]), make(kDiscriminationSigns[1]),
          make(kDiscriminationSigns[2]), make(kDiscriminationSigns[3])};
}

DenseOperator discrimination_sum(const ChannelParams& channel) {
  std::array<StateVector, 4> psi = discrimination_states(channel);
  DenseOperator sum = DenseOperator::projector(psi[0]);
  for (std::size_t i = 1; i < 4; ++i) sum = sum + DenseOperator::projector(psi[i]);
  return sum;
}

double min_x(const ChannelParams& channel) {
  return hermitian_eigen(discrimination_sum(channel)).values.back();
}

PsdCheck is_psd(const DenseOperator& op, double tol) {
  HermitianEigen eig = hermitian_eigen(op);
  double lowest = eig.values.front();
  return {lowest >= -tol, lowest};
}

PovmSet build_povm(const ChannelParams& channel, double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw PositivityError("POVM scaling x must be positive and finite", -1.0);
  }
  std::array<StateVector, 4> psi = discrimination_states(channel);
  std::array<DenseOperator, 4> conclusive = {
      (1.0 / x) * DenseOperator::projector(psi[0]), (1.0 / x) * DenseOperator::projector(psi[1]),
      (1.0 / x) * DenseOperator::projector(psi[2]), (1.0 / x) * DenseOperator::projector(psi[3])};
  DenseOperator rest = DenseOperator::identity(2);
  for (const DenseOperator& p : conclusive) rest = rest - p;

  PsdCheck check = is_psd(rest);
  if (!check.psd) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "POVM element P5 is not positive: eigenvalue " << check.min_eigenvalue
        << " at x = " << x << " (minimum admissible x = " << min_x(channel) << ")";
    throw PositivityError(msg.str(), check.min_eigenvalue);
  }

  // Rank-1 conclusive elements: sqrt(|psi><psi| / x) = |psi><psi| / sqrt(x).
  double root = 1.0 / std::sqrt(x);
  return PovmSet{
      {conclusive[0], conclusive[1], conclusive[2], conclusive[3], rest},
      {root * DenseOperator::projector(psi[0]), root * DenseOperator::projector(psi[1]),
       root * DenseOperator::projector(psi[2]), root * DenseOperator::projector(psi[3]),
       sqrt_psd(rest)},
      {"conclusive Psi_1 (++++)", "conclusive Psi_2 (++--)", "conclusive Psi_3 (+-+-)",
       "conclusive Psi_4 (+--+)", "inconclusive I - sum/x"},
      psi,
      x};
}

std::array<double, kNumPovmElements> povm_probabilities(const StateVector& state,
                                                        const PovmSet& povm,
                                                        const std::vector<Label>& targets) {
  std::array<double, kNumPovmElements> p{};
  for (std::size_t m = 0; m < kNumPovmElements; ++m) {
    p[m] = inner(state, apply_operator(state, povm.elements[m], targets)).real();
  }
  return p;
}

StateVector povm_branch(const StateVector& state, const PovmSet& povm,
                        const std::vector<Label>& targets, int index) {
  if (index < 1 || index > static_cast<int>(kNumPovmElements)) {
    throw std::invalid_argument("POVM index must be in 1..5");
  }
  return apply_operator(state, povm.kraus[static_cast<std::size_t>(index - 1)], targets);
}

PovmOutcome povm_sample(const StateVector& state, const PovmSet& povm,
                        const std::vector<Label>& targets, Rng& rng) {
  std::array<double, kNumPovmElements> p = povm_probabilities(state, povm, targets);
  std::size_t m = sample_index(p, rng);
  if (p[m] < kEpsZero * kEpsZero) {
    throw std::logic_error("POVM sampling selected a zero-probability outcome");
  }
  int index = static_cast<int>(m) + 1;
  return {index, normalize(povm_branch(state, povm, targets, index)).state, p[m]};
}

PovmOutcome povm_sample(const StateVector& state_ab, const PovmSet& povm, Rng& rng) {
  if (state_ab.num_qubits() != 2) {
    throw LabelError("two-qubit POVM sampling needs a two-qubit state");
  }
  return povm_sample(state_ab, povm, state_ab.labels(), rng);
}

}  // namespace qtele
