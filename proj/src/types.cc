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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace seb {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kNonConvergence:
      return "non_convergence";
    case ErrorCode::kEmptyInterior:
      return "empty_interior";
    case ErrorCode::kUnsupportedRegime:
      return "unsupported_regime";
    case ErrorCode::kSingularMatrix:
      return "singular_matrix";
    case ErrorCode::kSingularTransform:
      return "singular_transform";
    case ErrorCode::kCombinatorialBlowup:
      return "combinatorial_blowup";
    case ErrorCode::kDimensionTooLarge:
      return "dimension_too_large";
    case ErrorCode::kValidationFailure:
      return "validation_failure";
    case ErrorCode::kEmptyCloud:
      return "empty_cloud";
  }
  return "unknown";
}

Ball::Ball(Vector center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (center_.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty center");
  }
  if (!center_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite center");
  }
  if (!std::isfinite(radius_) || radius_ <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid radius");
  }
}

UnitQuadratic::UnitQuadratic(Vector a, double theta)
    : a_(std::move(a)), theta_(theta) {
  if (a_.size() == 0 || !a_.allFinite() || !std::isfinite(theta_)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite quadratic");
  }
}

double UnitQuadratic::operator()(const Vector& x) const {
  if (x.size() != a_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has dimension " + std::to_string(x.size()) +
                    ", expected " + std::to_string(a_.size()));
  }
  return x.squaredNorm() - 2.0 * a_.dot(x) + theta_;
}

UnitQuadratic BallToQuadratic(const Ball& ball) {
  const double r = ball.radius();
  return UnitQuadratic(ball.center(),
                       ball.center().squaredNorm() - r * r);
}

Ball QuadraticToBall(const UnitQuadratic& q) {
  const double r2 = q.squared_radius();
  if (!(r2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadratic sublevel set has no interior");
  }
  return Ball(q.a(), std::sqrt(r2));
}

Instance::Instance(std::vector<Ball> balls) : balls_(std::move(balls)) {
  if (balls_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "instance needs at least one ball");
  }
  dimension_ = balls_.front().dimension();
  const auto m = static_cast<Eigen::Index>(balls_.size());
  centers_.resize(dimension_, m);
  thetas_.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Ball& b = balls_[static_cast<std::size_t>(i)];
    if (b.dimension() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "ball " + std::to_string(i) + " has dimension " +
                      std::to_string(b.dimension()) + ", expected " +
                      std::to_string(dimension_));
    }
    centers_.col(i) = b.center();
    const double r2 = b.radius() * b.radius();
    const double a2 = b.center().squaredNorm();
    thetas_(i) = a2 - r2;
    scale_ = std::max({scale_, a2, r2});
  }
}

std::vector<UnitQuadratic> Instance::quadratics() const {
  std::vector<UnitQuadratic> out;
  out.reserve(balls_.size());
  for (const Ball& b : balls_) out.push_back(BallToQuadratic(b));
  return out;
}

const char* SolutionStatusName(SolutionStatus status) {
  switch (status) {
    case SolutionStatus::kCertifiedOptimal:
      return "CertifiedOptimal";
    case SolutionStatus::kUpperBoundOnly:
      return "UpperBoundOnly";
    case SolutionStatus::kEmptyInterior:
      return "EmptyInterior";
    case SolutionStatus::kDegeneratePoint:
      return "DegeneratePoint";
  }
  return "Unknown";
}

const char* RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kConvexCase:
      return "ConvexCase";
    case Regime::kCriticalCase:
      return "CriticalCase";
    case Regime::kUnsupported:
      return "Unsupported";
  }
  return "Unknown";
}

Regime RegimeFromRank(int rank, Eigen::Index n, std::size_t m) {
  if (rank < n) return Regime::kConvexCase;
  if (static_cast<Eigen::Index>(m) == n) return Regime::kCriticalCase;
  return Regime::kUnsupported;
}

}  // namespace seb
