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

#include "seb/sampler.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "seb/solver.hpp"
#include "test_util.hpp"

namespace seb {
namespace {

using ::Eigen::Vector2d;

TEST(SampleIntersectionTest, LensPointsSatisfyConstraints) {
  const Instance lens = testing::LensInstance();
  for (SamplingMethod method :
       {SamplingMethod::kHitAndRun, SamplingMethod::kRejection}) {
    const SampleCloud cloud = SampleIntersection(lens, 10000, 1, method);
    ASSERT_EQ(cloud.points.size(), 10000u);
    EXPECT_EQ(cloud.method, method);
    Vector mean = Vector::Zero(2);
    for (const Vector& x : cloud.points) {
      EXPECT_LE(testing::MaxConstraint(lens, x), 1e-12);
      mean += x;
    }
    mean /= 10000.0;
    // The lens is symmetric about both axes.
    EXPECT_LE(mean.norm(), 0.05) << SamplingMethodName(method);
  }
}

TEST(SampleIntersectionTest, DisjointThrows) {
  try {
    SampleIntersection(testing::DisjointInstance(), 10, 1,
                       SamplingMethod::kHitAndRun);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInterior);
  }
}

TEST(SampleIntersectionTest, SeedDeterminesCloud) {
  const Instance lens = testing::LensInstance();
  const SampleCloud a =
      SampleIntersection(lens, 100, 5, SamplingMethod::kHitAndRun);
  const SampleCloud b =
      SampleIntersection(lens, 100, 5, SamplingMethod::kHitAndRun);
  const SampleCloud c =
      SampleIntersection(lens, 100, 6, SamplingMethod::kHitAndRun);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, c.points);
  SamplerOptions options;
  options.chains = 4;
  options.threads = 2;
  const SampleCloud d =
      SampleIntersection(lens, 100, 5, SamplingMethod::kHitAndRun, options);
  options.threads = 1;
  const SampleCloud e =
      SampleIntersection(lens, 100, 5, SamplingMethod::kHitAndRun, options);
  EXPECT_EQ(d.points, e.points);
}

TEST(SampleIntersectionTest, ThinRegionFallsBackToHitAndRun) {
  // A sliver in R^3: rejection from the bounding box of the smallest ball
  // almost never lands inside.
  const Instance sliver = testing::MakeInstance(
      {{-10, 0, 0}, {10, 0, 0}}, {10.0001, 10.0001});
  const SampleCloud cloud =
      SampleIntersection(sliver, 200, 2, SamplingMethod::kRejection);
  EXPECT_EQ(cloud.method, SamplingMethod::kHitAndRun);
  for (const Vector& x : cloud.points) {
    EXPECT_LE(testing::MaxConstraint(sliver, x), 1e-9);
  }
}

TEST(SampleIntersectionTest, RandomInstancesStayInsideSolutionBall) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::RandomSquareInstance(2 + trial % 3, rng);
    const Solution s = SolveSeb(inst);
    const SampleCloud cloud =
        SampleIntersection(inst, 2000, trial, SamplingMethod::kHitAndRun);
    EXPECT_LE(FarthestDistance(cloud, s.center), s.radius + 1e-6);
  }
}

TEST(FarthestDistanceTest, LensApproachesCorners) {
  const Instance lens = testing::LensInstance();
  const SampleCloud cloud =
      SampleIntersection(lens, 10000, 4, SamplingMethod::kHitAndRun);
  const double d = FarthestDistance(cloud, Vector2d(0, 0));
  EXPECT_LE(d, 1.0 + 1e-6);
  EXPECT_GE(d, 0.95);
}

TEST(FarthestDistanceTest, EmptyCloudThrows) {
  try {
    FarthestDistance(SampleCloud{}, Vector2d(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCloud);
  }
}

TEST(CloudMebTest, SquareCorners) {
  SampleCloud cloud;
  cloud.points = {Vector2d(1, 1), Vector2d(-1, 1), Vector2d(1, -1),
                  Vector2d(-1, -1)};
  const EnclosingBall ball = CloudMeb(cloud, 10000);
  EXPECT_NEAR(ball.radius, std::sqrt(2.0), 1e-2);
  EXPECT_LE(ball.center.norm(), 1e-2);
}

TEST(CloudMebTest, RadiusWithinCoreSetBound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    SampleCloud cloud;
    for (int i = 0; i < 200; ++i) {
      cloud.points.push_back(testing::GaussianMatrix(3, 1, rng).col(0));
    }
    const int iterations = 400;
    const EnclosingBall ball = CloudMeb(cloud, iterations);
    EXPECT_NEAR(FarthestDistance(cloud, ball.center), ball.radius, 1e-12);
    // Half the diameter and the Jung bound bracket the optimum.
    double diameter = 0.0;
    for (const Vector& p : cloud.points) {
      for (const Vector& q : cloud.points) {
        diameter = std::max(diameter, (p - q).norm());
      }
    }
    EXPECT_GE(ball.radius, 0.5 * diameter - 1e-12);
    EXPECT_LE(ball.radius,
              (1.0 + 1.0 / std::sqrt(iterations)) * diameter * std::sqrt(3.0 / 8.0) +
                  1e-9);
  }
}

TEST(CloudMebTest, LensCloudLowerBoundsRadius) {
  const SampleCloud cloud = SampleIntersection(
      testing::LensInstance(), 10000, 5, SamplingMethod::kHitAndRun);
  const EnclosingBall ball = CloudMeb(cloud, 1000);
  EXPECT_GE(ball.radius, 0.9);
  EXPECT_LE(ball.radius, 1.0 + 1e-6 + 1.0 / std::sqrt(1000.0));
}

TEST(GridMinMaxGTest, Lens) {
  const GridMinimum g = GridMinMaxG(testing::LensInstance(), 400,
                                    Vector2d(-2, -2), Vector2d(2, 2));
  EXPECT_NEAR(g.value, -1.0, g.resolution_bound + 1e-12);
  EXPECT_GE(g.value, -1.0 - 1e-12);
}

TEST(GridMinMaxGTest, DisjointIsPositive) {
  const GridMinimum g = GridMinMaxG(testing::DisjointInstance(), 600,
                                    Vector2d(-6, -3), Vector2d(6, 3));
  EXPECT_NEAR(g.value, 24.0, 1e-9);
  EXPECT_LE(g.argmin.norm(), 1e-9);
}

TEST(GridMinMaxGTest, AgreesWithNegatedQpValue) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    const Instance inst = testing::RandomSquareInstance(n, rng);
    const Solution s = SolveSeb(inst);
    const Vector lo = inst.centers().rowwise().minCoeff();
    const Vector hi = inst.centers().rowwise().maxCoeff();
    const GridMinimum g = GridMinMaxG(inst, n == 3 ? 60 : 300, lo, hi);
    EXPECT_GE(g.value, -s.qp_value - 1e-9 * (1 + inst.scale()));
    EXPECT_LE(g.value, -s.qp_value + g.resolution_bound + 1e-9);
  }
}

TEST(GridMinMaxGTest, HighDimensionThrows) {
  const Instance inst =
      testing::MakeInstance({{0, 0, 0, 0, 0}}, {1.0});
  try {
    GridMinMaxG(inst, 10, Vector::Constant(5, -1), Vector::Constant(5, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
  }
}

}  // namespace
}  // namespace seb
