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

#include "qtele/rng.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qtele {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t sample_index(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += std::max(w, 0.0);
  double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  if (last_positive == weights.size()) {
    throw std::logic_error("sample_index called with no positive weight");
  }
  return last_positive;
}

StateVector haar_random_state(std::vector<Label> labels, Rng& rng) {
  std::size_t dim = std::size_t{1} << labels.size();
  std::vector<Complex> amps(dim);
  for (;;) {
    double sum = 0.0;
    for (Complex& a : amps) {
      double re = rng.normal();
      double im = rng.normal();
      a = Complex(re, im);
      sum += re * re + im * im;
    }
    if (sum > 1e-300) {
      double n = std::sqrt(sum);
      for (Complex& a : amps) a /= n;
      return StateVector(std::move(labels), std::move(amps));
    }
  }
}

}  // namespace qtele
