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

#ifndef QTELE_BELLCHECK_H_
#define QTELE_BELLCHECK_H_

#include <array>
#include <cstdint>

#include "qtele/qstate.h"
#include "qtele/rng.h"

namespace qtele {

// Spin analyzer direction in the x-z plane, measured from +z. The angle is
// wrapped into [0, 2 pi).
class AnalyzerSetting {
 public:
  explicit AnalyzerSetting(double angle);
  double angle() const { return angle_; }

 private:
  double angle_;
};

// n . sigma = cos(angle) Z + sin(angle) X.
DenseOperator spin_observable(const AnalyzerSetting& setting);

// <Psi-| (n_a . sigma) (x) (n_b . sigma) |Psi->, evaluated on the simulator.
double singlet_correlation(const AnalyzerSetting& a, const AnalyzerSetting& b);

// |E(a1,b1) - E(a1,b2) + E(a2,b1) + E(a2,b2)|.
double chsh_value(const AnalyzerSetting& a1, const AnalyzerSetting& a2,
                  const AnalyzerSetting& b1, const AnalyzerSetting& b2);

struct SampledCorrelation {
  double mean;
  double standard_error;
  std::uint64_t trials;
};

// Estimates E(a, b) from `trials` simulated +-1 spin measurement pairs.
SampledCorrelation sample_singlet_correlation(const AnalyzerSetting& a, const AnalyzerSetting& b,
                                              std::uint64_t trials, Rng& rng);

struct SampledChsh {
  std::array<SampledCorrelation, 4> correlations;  // (a1b1, a1b2, a2b1, a2b2)
  double s;
  double standard_error;
};

SampledChsh sample_chsh(const AnalyzerSetting& a1, const AnalyzerSetting& a2,
                        const AnalyzerSetting& b1, const AnalyzerSetting& b2,
                        std::uint64_t trials, Rng& rng);

}  // namespace qtele

#endif  // QTELE_BELLCHECK_H_
