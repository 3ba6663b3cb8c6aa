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

#ifndef QTELE_TOLERANCES_H_
#define QTELE_TOLERANCES_H_

namespace qtele {

// Shared numerical tolerances. Every module compares against these rather
// than local literals.
inline constexpr double kEpsNorm = 1e-12;
inline constexpr double kEpsZero = 1e-12;
inline constexpr double kEpsPsd = 1e-10;
// Smallest admissible channel coefficient.
inline constexpr double kEpsCoef = 1e-9;

}  // namespace qtele

#endif  // QTELE_TOLERANCES_H_
