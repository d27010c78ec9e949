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

#include "seb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace seb {

RankRegime Classify(const Instance& instance, double rank_tol) {
  RankRegime out;
  out.rank_centers = NumericalRank(instance.centers(), rank_tol);
  out.regime =
      RegimeFromRank(out.rank_centers, instance.dimension(), instance.size());
  return out;
}

Solution SolveSeb(const Instance& instance, const SolveOptions& options) {
  Solution sol;
  sol.regime = Classify(instance, options.rank_tol);

  const SimplexQP qp = BuildQp(instance);
  const QPResult qp_result = Solve(qp, options.qp);
  sol.multipliers = qp_result.minimizer;
  sol.qp_value = qp_result.value;
  sol.fw_gap = qp_result.gap;
  sol.iterations = qp_result.iterations;
  sol.converged = qp_result.converged;
  sol.center = instance.centers() * sol.multipliers;

  const Matrix shifted =
      instance.centers().colwise() - sol.center;
  const int rank_shifted = NumericalRank(shifted, options.rank_tol);
  sol.regime.rank_shifted = rank_shifted;

  const double tol = options.degenerate_tol * (1.0 + instance.scale());
  const double q = sol.qp_value;
  if (q > tol) {
    sol.radius = std::sqrt(q);
    const bool pre_supported = sol.regime.regime != Regime::kUnsupported;
    const bool post_supported =
        RegimeFromRank(rank_shifted, instance.dimension(), instance.size()) !=
        Regime::kUnsupported;
    sol.status = pre_supported && post_supported
                     ? SolutionStatus::kCertifiedOptimal
                     : SolutionStatus::kUpperBoundOnly;
  } else if (q >= -tol) {
    sol.radius = 0.0;
    sol.status = SolutionStatus::kDegeneratePoint;
  } else {
    sol.radius = 0.0;
    sol.status = SolutionStatus::kEmptyInterior;
  }
  return sol;
}

UnitQuadratic SolutionQuadratic(const Solution& solution) {
  return UnitQuadratic(solution.center, solution.center.squaredNorm() -
                                            solution.radius * solution.radius);
}

InteriorCheck CheckInterior(const Instance& instance,
                            const Solution& solution) {
  if (solution.center.size() != instance.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "solution does not match instance dimension");
  }
  InteriorCheck out;
  double max_g = -std::numeric_limits<double>::infinity();
  for (const UnitQuadratic& g : instance.quadratics()) {
    max_g = std::max(max_g, g(solution.center));
  }
  out.max_constraint = max_g;

  // max_i g_i(a) + q(mu) equals the Frank-Wolfe gap at mu.
  const double slack = std::max(0.0, solution.fw_gap) +
                       1e-8 * (1.0 + instance.scale());
  if (max_g > -solution.qp_value + slack) {
    throw Error(ErrorCode::kValidationFailure,
                "max_i g_i(center) = " + std::to_string(max_g) +
                    " exceeds -q* = " + std::to_string(-solution.qp_value));
  }
  const double tol = kBaseTolerance * (1.0 + instance.scale());
  out.nonempty = solution.qp_value > tol;
  if (out.nonempty) out.slater_point = solution.center;
  return out;
}

Certificate BuildCertificate(const Instance& instance,
                             const Solution& solution) {
  if (solution.status != SolutionStatus::kCertifiedOptimal &&
      solution.status != SolutionStatus::kUpperBoundOnly) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("no certificate for status ") +
                    SolutionStatusName(solution.status));
  }
  const auto m = static_cast<Eigen::Index>(instance.size());
  if (solution.multipliers.size() != m ||
      solution.center.size() != instance.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "solution does not match instance");
  }
  Certificate cert;
  cert.multipliers = solution.multipliers;
  cert.alpha = solution.multipliers.sum() - 1.0;
  cert.offdiag = solution.center - instance.centers() * solution.multipliers;
  cert.beta = solution.radius * solution.radius -
              solution.center.squaredNorm() +
              solution.multipliers.dot(instance.thetas());
  const PsdVerdict verdict =
      ArrowheadPsd(cert.alpha, cert.offdiag, cert.beta,
                   kBaseTolerance * (1.0 + instance.scale()));
  cert.psd_ok = verdict.psd;
  cert.residual = verdict.residual;
  return cert;
}

double IdentityResidual(const Instance& instance, const Solution& solution,
                        const Vector& x) {
  const std::vector<UnitQuadratic> gs = instance.quadratics();
  if (solution.multipliers.size() != static_cast<Eigen::Index>(gs.size())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "multipliers do not match instance");
  }
  double combined = 0.0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    combined += solution.multipliers(static_cast<Eigen::Index>(i)) * gs[i](x);
  }
  return combined - SolutionQuadratic(solution)(x);
}

}  // namespace seb
