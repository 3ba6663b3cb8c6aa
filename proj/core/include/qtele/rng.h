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

#ifndef QTELE_RNG_H_
#define QTELE_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qtele/qstate.h"

namespace qtele {

// Seedable random stream with a platform-independent output sequence.
//
// std::mt19937_64's sequence is fixed by the standard, but the standard
// distributions are not, so doubles and normals are derived by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for item `index` of a run seeded with `seed`.
  static Rng for_stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

// Draws an index with the given (approximately normalized) weights, never
// returning a zero-weight index.
std::size_t sample_index(std::span<const double> weights, Rng& rng);

std::uint64_t splitmix64(std::uint64_t x);

// Haar-random pure state on `labels`.
StateVector haar_random_state(std::vector<Label> labels, Rng& rng);

}  // namespace qtele

#endif  // QTELE_RNG_H_
