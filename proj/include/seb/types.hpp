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

#ifndef SEB_TYPES_HPP_
#define SEB_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "Eigen/Core"

namespace seb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Base relative tolerance. Comparisons are scaled by (1 + magnitude).
inline constexpr double kBaseTolerance = 1e-9;

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kParse,
  kNonConvergence,
  kEmptyInterior,
  kUnsupportedRegime,
  kSingularMatrix,
  kSingularTransform,
  kCombinatorialBlowup,
  kDimensionTooLarge,
  kValidationFailure,
  kEmptyCloud,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Closed Euclidean ball {x : ||x - center|| <= radius}.
class Ball {
 public:
  // Throws kInvalidArgument on radius <= 0 or non-finite entries.
  Ball(Vector center, double radius);

  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  Eigen::Index dimension() const { return center_.size(); }

  bool operator==(const Ball& other) const = default;

 private:
  Vector center_;
  double radius_;
};

// x -> x'x - 2a'x + theta. A ball B(a, r) is the sublevel set {q <= 0} of the
// quadratic with theta = ||a||^2 - r^2.
class UnitQuadratic {
 public:
  UnitQuadratic(Vector a, double theta);

  const Vector& a() const { return a_; }
  double theta() const { return theta_; }
  Eigen::Index dimension() const { return a_.size(); }

  // Throws kDimensionMismatch.
  double operator()(const Vector& x) const;

  // Squared radius ||a||^2 - theta of the sublevel set; negative when empty.
  double squared_radius() const { return a_.squaredNorm() - theta_; }

 private:
  Vector a_;
  double theta_;
};

UnitQuadratic BallToQuadratic(const Ball& ball);

// Throws kInvalidArgument when the sublevel set has no positive radius.
Ball QuadraticToBall(const UnitQuadratic& q);

inline double EvalQuadratic(const UnitQuadratic& q, const Vector& x) {
  return q(x);
}

// A collection of m >= 1 balls in R^n, all of the same dimension.
class Instance {
 public:
  explicit Instance(std::vector<Ball> balls);

  Eigen::Index dimension() const { return dimension_; }
  std::size_t size() const { return balls_.size(); }
  const std::vector<Ball>& balls() const { return balls_; }
  const Ball& ball(std::size_t i) const { return balls_[i]; }

  // n x m matrix whose columns are the centers.
  const Matrix& centers() const { return centers_; }
  // theta_i = ||a_i||^2 - r_i^2.
  const Vector& thetas() const { return thetas_; }

  std::vector<UnitQuadratic> quadratics() const;

  // Magnitude used to scale absolute tolerances: max_i max(||a_i||^2, r_i^2).
  double scale() const { return scale_; }

  bool operator==(const Instance& other) const { return balls_ == other.balls_; }

 private:
  std::vector<Ball> balls_;
  Eigen::Index dimension_ = 0;
  Matrix centers_;
  Vector thetas_;
  double scale_ = 0.0;
};

enum class SolutionStatus {
  kCertifiedOptimal,
  kUpperBoundOnly,
  kEmptyInterior,
  kDegeneratePoint,
};

const char* SolutionStatusName(SolutionStatus status);

enum class Regime {
  kConvexCase,    // rank < n
  kCriticalCase,  // rank = n = m
  kUnsupported,   // rank = n < m
};

const char* RegimeName(Regime regime);

// Regime implied by a rank of m vectors in R^n.
Regime RegimeFromRank(int rank, Eigen::Index n, std::size_t m);

struct RankRegime {
  int rank_centers = 0;
  Regime regime = Regime::kConvexCase;
  std::optional<int> rank_shifted;
};

struct Solution {
  Vector center;
  double radius = 0.0;
  Vector multipliers;
  double qp_value = 0.0;
  SolutionStatus status = SolutionStatus::kUpperBoundOnly;

  RankRegime regime;
  double fw_gap = 0.0;
  int iterations = 0;
  bool converged = true;
};

// Data of the arrowhead matrix [[alpha I, offdiag], [offdiag', beta]].
struct Certificate {
  Vector multipliers;
  double alpha = 0.0;
  Vector offdiag;
  double beta = 0.0;
  bool psd_ok = false;
  double residual = 0.0;
};

}  // namespace seb

#endif  // SEB_TYPES_HPP_
