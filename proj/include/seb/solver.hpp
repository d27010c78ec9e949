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

#ifndef SEB_SOLVER_HPP_
#define SEB_SOLVER_HPP_

#include <optional>

#include "seb/linalg.hpp"
#include "seb/simplex_qp.hpp"
#include "seb/types.hpp"

namespace seb {

// Regime from rank{a_1, ..., a_m}; rank_shifted is left empty.
RankRegime Classify(const Instance& instance,
                    double rank_tol = kDefaultRankTolerance);

struct SolveOptions {
  QPOptions qp;
  double rank_tol = kDefaultRankTolerance;
  // Relative threshold on |q*| separating DegeneratePoint from the other
  // outcomes, multiplied by (1 + instance.scale()).
  double degenerate_tol = kBaseTolerance;
};

// Smallest ball enclosing the intersection of the instance's balls:
// center = sum mu_i a_i and radius^2 = q(mu) at the simplex QP minimizer.
// A QP solve that stops at max_iter is reported through converged = false.
Solution SolveSeb(const Instance& instance, const SolveOptions& options = {});

// UnitQuadratic of the returned ball, theta = ||a||^2 - r^2.
UnitQuadratic SolutionQuadratic(const Solution& solution);

struct InteriorCheck {
  bool nonempty = false;
  std::optional<Vector> slater_point;
  double max_constraint = 0.0;  // max_i g_i(center)
};

// The intersection has nonempty interior iff q* > 0, since
// min_x max_i g_i(x) = -q*; the solution center then attains that value.
// Throws kValidationFailure when max_i g_i(center) exceeds -q* + tol.
InteriorCheck CheckInterior(const Instance& instance,
                            const Solution& solution);

// Arrowhead data alpha = sum mu - 1, b = a - sum mu_i a_i and
// beta = r^2 - ||a||^2 + sum mu_i theta_i, with its PSD verdict.
// Requires status CertifiedOptimal or UpperBoundOnly.
Certificate BuildCertificate(const Instance& instance,
                             const Solution& solution);

// sum_i mu_i g_i(x) - g(x), g the solution ball's quadratic. Vanishes for
// every x at an exact simplex-QP solution.
double IdentityResidual(const Instance& instance, const Solution& solution,
                        const Vector& x);

}  // namespace seb

#endif  // SEB_SOLVER_HPP_
