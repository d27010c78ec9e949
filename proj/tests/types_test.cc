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

#include "seb/types.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace seb {
namespace {

using ::Eigen::Vector2d;

TEST(BallTest, RejectsNonPositiveRadius) {
  EXPECT_THROW(Ball(Vector2d(0, 0), 0.0), Error);
  EXPECT_THROW(Ball(Vector2d(0, 0), -1.0), Error);
  try {
    Ball(Vector2d(0, 0), -1.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_STREQ(e.what(), "invalid radius");
  }
}

TEST(BallTest, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Ball(Vector2d(nan, 0), 1.0), Error);
  EXPECT_THROW(Ball(Vector2d(0, 0), std::numeric_limits<double>::infinity()),
               Error);
}

TEST(UnitQuadraticTest, BallConversion) {
  const UnitQuadratic q = BallToQuadratic(Ball(Vector2d(3, 4), 2.0));
  EXPECT_EQ(q.theta(), 21.0);
  EXPECT_EQ(q(Vector2d(3, 4)), -4.0);
  EXPECT_EQ(q.squared_radius(), 4.0);
}

TEST(UnitQuadraticTest, DimensionMismatchThrows) {
  const UnitQuadratic q(Vector2d(1, 0), 0.0);
  try {
    q(Eigen::Vector3d(1, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(UnitQuadraticTest, EmptySublevelSetHasNoBall) {
  EXPECT_THROW(QuadraticToBall(UnitQuadratic(Vector2d(1, 0), 2.0)), Error);
}

TEST(UnitQuadraticTest, RoundTripAndContainmentProperty) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.1, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector c = testing::GaussianMatrix(3, 1, rng).col(0);
    const Ball ball(c, radius(rng));
    const Ball back = QuadraticToBall(BallToQuadratic(ball));
    EXPECT_LE((back.center() - ball.center()).norm(), 1e-12);
    EXPECT_NEAR(back.radius(), ball.radius(), 1e-9 * (1 + c.squaredNorm()));

    const UnitQuadratic q = BallToQuadratic(ball);
    for (int k = 0; k < 20; ++k) {
      const Vector x = c + 2.0 * ball.radius() *
                               testing::GaussianMatrix(3, 1, rng).col(0);
      const double dist = (x - c).norm();
      if (std::abs(dist - ball.radius()) < 1e-6) continue;
      EXPECT_EQ(EvalQuadratic(q, x) <= 0.0, dist <= ball.radius());
    }
  }
}

TEST(InstanceTest, Accessors) {
  const Instance lens = testing::LensInstance();
  EXPECT_EQ(lens.dimension(), 2);
  EXPECT_EQ(lens.size(), 2u);
  EXPECT_NEAR(lens.thetas()(0), -1.0, 1e-15);
  EXPECT_EQ(lens.centers().col(1), Vector2d(1, 0));
  EXPECT_NEAR(lens.scale(), 2.0, 1e-15);
}

TEST(InstanceTest, RejectsEmptyAndMixedDimensions) {
  EXPECT_THROW(Instance({}), Error);
  try {
    Instance({Ball(Vector2d(0, 0), 1.0), Ball(Eigen::Vector3d(0, 0, 0), 1.0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(RegimeTest, FromRank) {
  EXPECT_EQ(RegimeFromRank(1, 2, 2), Regime::kConvexCase);
  EXPECT_EQ(RegimeFromRank(2, 2, 2), Regime::kCriticalCase);
  EXPECT_EQ(RegimeFromRank(2, 2, 3), Regime::kUnsupported);
  EXPECT_EQ(RegimeFromRank(2, 3, 5), Regime::kConvexCase);
}

}  // namespace
}  // namespace seb
