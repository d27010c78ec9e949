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

#ifndef SEB_SIMPLEX_QP_HPP_
#define SEB_SIMPLEX_QP_HPP_

#include <cstdint>
#include <optional>

#include "seb/types.hpp"

namespace seb {

// min_mu  mu' M mu - c' mu  subject to mu >= 0, sum(mu) = 1.
struct SimplexQP {
  Matrix gram;    // M = A'A, A holding the ball centers as columns
  Vector linear;  // c_i = ||a_i||^2 - r_i^2

  Eigen::Index size() const { return linear.size(); }
  double Objective(const Vector& mu) const;
  Vector Gradient(const Vector& mu) const;
};

SimplexQP BuildQp(const Instance& instance);

struct QPResult {
  Vector minimizer;
  double value = 0.0;
  double gap = 0.0;  // Frank-Wolfe duality gap, an upper bound on value - q*
  int iterations = 0;
  bool converged = false;
};

struct QPOptions {
  // Defaults: 1e-10 * (1 + |q(uniform)|) and 200 m + 10^4.
  std::optional<double> tol_gap;
  std::optional<int> max_iter;
  // Exact minimization over the current support after each Frank-Wolfe step.
  bool refine = true;
};

double DefaultGapTolerance(const SimplexQP& qp);

// Frank-Wolfe with exact line search from the barycenter. A result that hits
// max_iter before reaching tol_gap is returned with converged = false.
QPResult Solve(const SimplexQP& qp, const QPOptions& options = {});

// Euclidean projection onto the unit simplex.
Vector ProjectSimplex(const Vector& v);

struct GridOptimum {
  double value = 0.0;
  Vector minimizer;
};

inline constexpr std::uint64_t kGridOracleLimit = 10'000'000;

// Number of lattice points {k_i / k : sum k_i = k} on the m-simplex, saturated
// at UINT64_MAX.
std::uint64_t SimplexGridSize(std::int64_t m, std::int64_t k);

// Exhaustive minimum over the lattice. Ties resolve to the lexicographically
// smallest minimizer. Throws kCombinatorialBlowup beyond kGridOracleLimit.
GridOptimum GridOracle(const SimplexQP& qp, int k);

}  // namespace seb

#endif  // SEB_SIMPLEX_QP_HPP_
