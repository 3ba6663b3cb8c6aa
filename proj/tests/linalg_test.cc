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

#include "gtest/gtest.h"
#include "qtele/errors.h"
#include "qtele/rng.h"
#include "support/oracles.h"
#include "support/test_util.h"

using namespace qtele;

namespace {

DenseOperator random_hermitian(std::size_t arity, Rng& rng) {
  std::size_t n = std::size_t{1} << arity;
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    e[r * n + r] = rng.normal();
    for (std::size_t c = r + 1; c < n; ++c) {
      Complex v(rng.normal(), rng.normal());
      e[r * n + c] = v;
      e[c * n + r] = std::conj(v);
    }
  }
  return DenseOperator::general(arity, std::move(e));
}

}  // namespace

TEST(HermitianEigen, matches_eigen_oracle) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t arity = 1 + static_cast<std::size_t>(trial % 3);
    DenseOperator h = random_hermitian(arity, rng);
    HermitianEigen eig = hermitian_eigen(h);
    std::vector<double> expected = testutil::eigen_oracle_eigenvalues(h);
    ASSERT_EQ(eig.values.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_NEAR(eig.values[i], expected[i], 1e-12);
    }
  }
}

TEST(HermitianEigen, reconstructs_operator) {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    DenseOperator h = random_hermitian(2, rng);
    HermitianEigen eig = hermitian_eigen(h);
    std::size_t n = h.dim();
    std::vector<Complex> diag(n * n);
    for (std::size_t i = 0; i < n; ++i) diag[i * n + i] = eig.values[i];
    DenseOperator rebuilt =
        eig.vectors * DenseOperator::general(2, std::move(diag)) * eig.vectors.adjoint();
    EXPECT_LT(DenseOperator::max_abs_diff(rebuilt, h), 1e-12);
    EXPECT_LT(DenseOperator::max_abs_diff(eig.vectors.adjoint() * eig.vectors,
                                          DenseOperator::identity(2)),
              1e-12);
  }
}

TEST(HermitianEigen, diagonal_and_degenerate_inputs) {
  HermitianEigen id = hermitian_eigen(DenseOperator::identity(2));
  for (double v : id.values) EXPECT_EQ(v, 1.0);
  DenseOperator d = DenseOperator::general(2, {1.0, 0, 0, 0, 0, -0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  HermitianEigen eig = hermitian_eigen(d);
  EXPECT_EQ(eig.values.front(), -0.5);
  EXPECT_EQ(eig.values.back(), 1.0);
}

TEST(HermitianEigen, rejects_non_hermitian) {
  EXPECT_THROW(hermitian_eigen(DenseOperator::general(1, {0.0, 1.0, 0.0, 0.0})), InvariantError);
}

TEST(SqrtPsd, squares_back) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    DenseOperator a = random_hermitian(2, rng);
    DenseOperator psd = a * a;  // Hermitian squared is PSD
    DenseOperator root = sqrt_psd(psd);
    EXPECT_LT(DenseOperator::max_abs_diff(root * root, psd), 1e-10);
  }
}

TEST(SqrtPsd, clamps_tiny_negative_and_rejects_large) {
  DenseOperator tiny = DenseOperator::general(1, {1.0, 0.0, 0.0, -1e-13});
  DenseOperator root = sqrt_psd(tiny);
  EXPECT_EQ(root(1, 1), Complex(0.0));
  DenseOperator neg = DenseOperator::general(1, {1.0, 0.0, 0.0, -1e-6});
  EXPECT_THROW(sqrt_psd(neg), PositivityError);
}
