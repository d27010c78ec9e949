// Copyright 2026 The SEB Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seb/linalg.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace seb {
namespace {

using ::Eigen::Vector2d;
using ::Eigen::Vector3d;

TEST(NumericalRankTest, Examples) {
  EXPECT_EQ(NumericalRank(std::vector<Vector>{Vector2d(1, 0), Vector2d(2, 0)}),
            1);
  EXPECT_EQ(NumericalRank(std::vector<Vector>{Vector2d(1, 0), Vector2d(0, 1)}),
            2);
  EXPECT_EQ(NumericalRank(Matrix::Zero(3, 4)), 0);
  EXPECT_EQ(NumericalRank(std::vector<Vector>{Vector2d(1, 0),
                                              Vector2d(1, 1e-14)}),
            1);
}

TEST(NumericalRankTest, InvariantUnderPermutationAndScaling) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 1 + trial % 4;
    const Matrix cols = testing::GaussianMatrix(5, rank, rng) *
                        testing::GaussianMatrix(rank, 6, rng);
    const int base = NumericalRank(cols);
    EXPECT_EQ(base, rank);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix permuted(5, 6);
    for (int j = 0; j < 6; ++j) permuted.col(j) = cols.col(perm[j]) * scale(rng);
    EXPECT_EQ(NumericalRank(permuted), base);
  }
}

TEST(SolveAffineTest, ConsistentSystem) {
  Matrix a(1, 2);
  a << 1, 1;
  const AffineSolutionSet set = SolveAffine(a, Vector::Constant(1, 2.0));
  EXPECT_TRUE(set.consistent);
  EXPECT_LE((set.particular - Vector2d(1, 1)).norm(), 1e-12);
  ASSERT_EQ(set.nullspace_basis.cols(), 1);
  EXPECT_NEAR((a * set.nullspace_basis).norm(), 0.0, 1e-12);
  EXPECT_NEAR(set.nullspace_basis.norm(), 1.0, 1e-12);
}

TEST(SolveAffineTest, InconsistentSystem) {
  Matrix a(2, 2);
  a << 1, 1, 1, 1;
  const AffineSolutionSet set = SolveAffine(a, Vector2d(0, 1));
  EXPECT_FALSE(set.consistent);
  EXPECT_NEAR(set.residual, std::sqrt(0.5), 1e-12);
}

TEST(SolveAffineTest, ParticularIsMinimumNorm) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = testing::GaussianMatrix(2, 4, rng);
    const Vector b = testing::GaussianMatrix(2, 1, rng).col(0);
    const AffineSolutionSet set = SolveAffine(a, b);
    ASSERT_TRUE(set.consistent);
    EXPECT_LE((a * set.particular - b).norm(), 1e-10);
    EXPECT_NEAR((set.nullspace_basis.transpose() * set.particular).norm(), 0.0,
                1e-10);
    const Vector other =
        set.particular + set.nullspace_basis * Vector::Ones(2) * 0.3;
    EXPECT_LT(set.particular.norm(), other.norm());
  }
}

TEST(MinQuadraticOnAffineTest, LineExample) {
  Matrix a(1, 2);
  a << 1, 0;
  const AffineSolutionSet set = SolveAffine(a, Vector::Constant(1, 3.0));
  const AffineMinimum min = MinQuadraticOnAffine(
      UnitQuadratic(Vector2d(0, 2), 0.0), set);
  EXPECT_NEAR(min.value, 5.0, 1e-12);
  EXPECT_LE((min.argmin - Vector2d(3, 2)).norm(), 1e-12);
}

TEST(MinQuadraticOnAffineTest, BeatsRandomFeasiblePoints) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = testing::GaussianMatrix(1, 3, rng);
    const AffineSolutionSet set =
        SolveAffine(a, testing::GaussianMatrix(1, 1, rng).col(0));
    const UnitQuadratic q(testing::GaussianMatrix(3, 1, rng).col(0), 0.7);
    const AffineMinimum min = MinQuadraticOnAffine(q, set);
    EXPECT_NEAR(q(min.argmin), min.value, 1e-10);
    for (int k = 0; k < 20; ++k) {
      const Vector x = set.particular +
                       set.nullspace_basis *
                           testing::GaussianMatrix(2, 1, rng).col(0);
      EXPECT_GE(q(x), min.value - 1e-10);
    }
  }
}

TEST(MinQuadraticOnAffineTest, InconsistentThrows) {
  Matrix a(2, 1);
  a << 1, 1;
  EXPECT_THROW(
      MinQuadraticOnAffine(UnitQuadratic(Vector::Zero(1), 0.0),
                           SolveAffine(a, Vector2d(0, 1))),
      Error);
}

TEST(ArrowheadPsdTest, Examples) {
  EXPECT_TRUE(ArrowheadPsd(0, Vector2d(0, 0), 0).psd);
  EXPECT_TRUE(ArrowheadPsd(1, Vector2d(1, 0), 1).psd);
  const PsdVerdict bad = ArrowheadPsd(1, Vector2d(2, 0), 1);
  EXPECT_FALSE(bad.psd);
  EXPECT_NEAR(bad.residual, 3.0, 1e-12);
  EXPECT_FALSE(ArrowheadPsd(-1, Vector2d(0, 0), 1).psd);
}

TEST(ArrowheadPsdTest, AgreesWithEigenvalueOracle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double alpha = u(rng);
    const double beta = u(rng);
    const Vector b = 0.8 * testing::GaussianMatrix(3, 1, rng).col(0);
    const double lambda_min = testing::ArrowheadMinEigenvalue(alpha, b, beta);
    if (std::abs(lambda_min) < 1e-6) continue;
    ++checked;
    EXPECT_EQ(ArrowheadPsd(alpha, b, beta).psd, lambda_min > 0)
        << alpha << " " << beta << " " << b.transpose();
  }
  EXPECT_GT(checked, 900);
}

}  // namespace
}  // namespace seb
