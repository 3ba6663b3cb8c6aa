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

#include "qtele/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qtele/errors.h"
#include "qtele/tolerances.h"

namespace qtele {

HermitianEigen hermitian_eigen(const DenseOperator& op) {
  if (!op.is_hermitian(kEpsNorm)) {
    throw InvariantError("eigendecomposition needs a Hermitian operator");
  }
  const std::size_t n = op.dim();
  std::vector<Complex> a(op.entries().begin(), op.entries().end());
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<Complex>& m, std::size_t r, std::size_t c) -> Complex& {
    return m[r * n + c];
  };

  double frob = 0.0;
  for (const Complex& x : a) frob += std::norm(x);
  frob = std::sqrt(frob);

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(a, p, q));
    }
    if (std::sqrt(off) <= 1e-17 * frob || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex apq = at(a, p, q);
        double r = std::abs(apq);
        if (r == 0.0) continue;
        Complex phase = apq / r;
        double app = at(a, p, p).real();
        double aqq = at(a, q, q).real();
        double theta = (aqq - app) / (2.0 * r);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        // G = diag(1, conj(phase)) * real rotation, restricted to (p, q).
        Complex g_pp = c;
        Complex g_pq = s;
        Complex g_qp = -s * std::conj(phase);
        Complex g_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          Complex akp = at(a, k, p);
          Complex akq = at(a, k, q);
          at(a, k, p) = akp * g_pp + akq * g_qp;
          at(a, k, q) = akp * g_pq + akq * g_qq;
          Complex vkp = at(v, k, p);
          Complex vkq = at(v, k, q);
          at(v, k, p) = vkp * g_pp + vkq * g_qp;
          at(v, k, q) = vkp * g_pq + vkq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Complex apk = at(a, p, k);
          Complex aqk = at(a, q, k);
          at(a, p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          at(a, q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        at(a, p, p) = at(a, p, p).real();
        at(a, q, q) = at(a, q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });
  std::vector<double> values(n);
  std::vector<Complex> vectors(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = a[order[j] * n + order[j]].real();
    for (std::size_t k = 0; k < n; ++k) vectors[k * n + j] = v[k * n + order[j]];
  }
  return {std::move(values), DenseOperator::general(op.arity(), std::move(vectors))};
}

DenseOperator sqrt_psd(const DenseOperator& op) {
  HermitianEigen eig = hermitian_eigen(op);
  const std::size_t n = op.dim();
  std::vector<double> roots(n);
  for (std::size_t j = 0; j < n; ++j) {
    double lambda = eig.values[j];
    if (lambda < -kEpsPsd) {
      throw PositivityError("operator has negative eigenvalue " + std::to_string(lambda), lambda);
    }
    roots[j] = std::sqrt(std::max(lambda, 0.0));
  }
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc{};
      for (std::size_t j = 0; j < n; ++j) {
        acc += eig.vectors(r, j) * roots[j] * std::conj(eig.vectors(c, j));
      }
      out[r * n + c] = acc;
    }
  }
  return DenseOperator::general(op.arity(), std::move(out));
}

}  // namespace qtele
