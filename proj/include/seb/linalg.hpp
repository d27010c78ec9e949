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

#ifndef SEB_LINALG_HPP_
#define SEB_LINALG_HPP_

#include <vector>

#include "seb/types.hpp"

namespace seb {

inline constexpr double kDefaultRankTolerance = 1e-10;

// Number of singular values above tol * sigma_max * max(rows, cols) of the
// matrix whose columns are the given vectors. Zero for an all-zero input.
int NumericalRank(const Matrix& columns, double tol = kDefaultRankTolerance);
int NumericalRank(const std::vector<Vector>& vectors,
                  double tol = kDefaultRankTolerance);

// Solution set {particular + nullspace_basis * t} of A x = b in the
// least-squares sense.
struct AffineSolutionSet {
  Vector particular;        // minimum-norm least-squares solution
  Matrix nullspace_basis;   // orthonormal columns spanning ker(A); may be n x 0
  double residual = 0.0;    // ||A particular - b||
  bool consistent = false;  // residual <= tol * (1 + ||b||)
};

AffineSolutionSet SolveAffine(const Matrix& a, const Vector& b,
                              double tol = kBaseTolerance,
                              double rank_tol = kDefaultRankTolerance);

struct AffineMinimum {
  double value = 0.0;
  Vector argmin;
};

// Minimizes q over the affine set. q restricted to the set is strictly convex,
// so the minimizer is unique. Throws kInvalidArgument on an inconsistent set.
AffineMinimum MinQuadraticOnAffine(const UnitQuadratic& q,
                                   const AffineSolutionSet& set);

struct PsdVerdict {
  bool psd = false;
  double residual = 0.0;  // worst raw violation, 0 when exactly PSD
};

// Decides whether [[alpha I, b], [b', beta]] is positive semidefinite using
// alpha >= 0, beta >= 0 and ||b||^2 <= alpha * beta, each relaxed by tol.
PsdVerdict ArrowheadPsd(double alpha, const Vector& b, double beta,
                        double tol = kBaseTolerance);

}  // namespace seb

#endif  // SEB_LINALG_HPP_
