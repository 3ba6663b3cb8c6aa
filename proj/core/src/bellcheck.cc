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

#include "qtele/bellcheck.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtele/gates.h"

namespace qtele {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Joint probabilities of (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> joint_outcome_probabilities(const AnalyzerSetting& a,
                                                  const AnalyzerSetting& b) {
  StateVector singlet = bell_state(BellKind::kPsiMinus, "1", "2");
  DenseOperator id = DenseOperator::identity(1);
  DenseOperator na = spin_observable(a);
  DenseOperator nb = spin_observable(b);
  std::array<double, 4> p{};
  std::size_t k = 0;
  for (double sa : {+1.0, -1.0}) {
    for (double sb : {+1.0, -1.0}) {
      DenseOperator pa = Complex(0.5) * (id + Complex(sa) * na);
      DenseOperator pb = Complex(0.5) * (id + Complex(sb) * nb);
      StateVector projected = apply_operator(singlet, DenseOperator::kron(pa, pb), {"1", "2"});
      p[k++] = inner(singlet, projected).real();
    }
  }
  return p;
}

}  // namespace

AnalyzerSetting::AnalyzerSetting(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("analyzer angle must be finite");
  }
  angle_ = std::fmod(angle, kTwoPi);
  if (angle_ < 0.0) angle_ += kTwoPi;
  if (angle_ >= kTwoPi) angle_ = 0.0;
}

DenseOperator spin_observable(const AnalyzerSetting& setting) {
  double c = std::cos(setting.angle());
  double s = std::sin(setting.angle());
  return DenseOperator::unitary(1, {c, s, s, -c});
}

double singlet_correlation(const AnalyzerSetting& a, const AnalyzerSetting& b) {
  StateVector singlet = bell_state(BellKind::kPsiMinus, "1", "2");
  DenseOperator joint = DenseOperator::kron(spin_observable(a), spin_observable(b));
  return inner(singlet, apply_gate(singlet, joint, {"1", "2"})).real();
}

double chsh_value(const AnalyzerSetting& a1, const AnalyzerSetting& a2,
                  const AnalyzerSetting& b1, const AnalyzerSetting& b2) {
  return std::abs(singlet_correlation(a1, b1) - singlet_correlation(a1, b2) +
                  singlet_correlation(a2, b1) + singlet_correlation(a2, b2));
}

SampledCorrelation sample_singlet_correlation(const AnalyzerSetting& a, const AnalyzerSetting& b,
                                              std::uint64_t trials, Rng& rng) {
  if (trials == 0) {
    throw std::invalid_argument("sampling needs at least one trial");
  }
  std::array<double, 4> p = joint_outcome_probabilities(a, b);
  constexpr std::array<double, 4> kProduct = {+1.0, -1.0, -1.0, +1.0};
  double sum = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) sum += kProduct[sample_index(p, rng)];
  double n = static_cast<double>(trials);
  double mean = sum / n;
  // Products are +-1, so the sample variance is 1 - mean^2 (times n/(n-1)).
  double variance = trials > 1 ? (1.0 - mean * mean) * n / (n - 1.0) : 0.0;
  return {mean, std::sqrt(variance / n), trials};
}

SampledChsh sample_chsh(const AnalyzerSetting& a1, const AnalyzerSetting& a2,
                        const AnalyzerSetting& b1, const AnalyzerSetting& b2,
                        std::uint64_t trials, Rng& rng) {
  SampledChsh out{{sample_singlet_correlation(a1, b1, trials, rng),
                   sample_singlet_correlation(a1, b2, trials, rng),
                   sample_singlet_correlation(a2, b1, trials, rng),
                   sample_singlet_correlation(a2, b2, trials, rng)},
                  0.0,
                  0.0};
  const auto& e = out.correlations;
  out.s = std::abs(e[0].mean - e[1].mean + e[2].mean + e[3].mean);
  double var = 0.0;
  for (const auto& c : e) var += c.standard_error * c.standard_error;
  out.standard_error = std::sqrt(var);
  return out;
}

}  // namespace qtele
