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

#include "seb/simplex_qp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "Eigen/QR"
#include "Eigen/SVD"

namespace seb {
namespace {

// First index of the minimal entry.
Eigen::Index ArgMin(const Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v(i) < v(best)) best = i;
  }
  return best;
}

void Renormalize(Vector& mu) {
  mu = mu.cwiseMax(0.0);
  mu /= mu.sum();
}

// Moves mu toward the minimizer of q over {sum mu = 1} restricted to the
// current support, stopping at the simplex boundary. Each pass either lands
// on the support minimizer or drops one coordinate from the support. When the
// centers on the support are affinely dependent, q may be linear along
// directions d with M d = 0 and sum d = 0; the pass then follows the descent
// direction in that subspace to the boundary.
void RefineOnSupport(const SimplexQP& qp, Vector& mu) {
  const Eigen::Index m = qp.size();
  for (Eigen::Index pass = 0; pass < m; ++pass) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (mu(i) > 0.0) support.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(support.size());
    if (k <= 1) return;

    const Vector grad = qp.Gradient(mu);
    Matrix constraint(k + 1, k);
    Vector grad_s(k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) {
        constraint(r, c) = qp.gram(support[r], support[c]);
      }
      constraint(k, r) = 1.0;
      grad_s(r) = grad(support[r]);
    }
    Eigen::JacobiSVD<Matrix> svd(constraint, Eigen::ComputeFullV);
    const Vector& sigma = svd.singularValues();
    const double cutoff = 1e-12 * std::max(1.0, sigma(0)) * static_cast<double>(k);
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
    const Matrix kernel = svd.matrixV().rightCols(k - rank);

    Vector d = Vector::Zero(m);
    double curvature = 0.0;
    const Vector flat = -(kernel * (kernel.transpose() * grad_s));
    if (flat.norm() > 1e-13 * (1.0 + grad_s.norm())) {
      for (Eigen::Index r = 0; r < k; ++r) d(support[r]) = flat(r);
    } else {
      Matrix kkt = Matrix::Zero(k + 1, k + 1);
      Vector rhs(k + 1);
      for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
          kkt(r, c) = 2.0 * constraint(r, c);
        }
        kkt(r, k) = 1.0;
        kkt(k, r) = 1.0;
        rhs(r) = qp.linear(support[r]);
      }
      rhs(k) = 1.0;
      const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
      if (!sol.allFinite()) return;
      for (Eigen::Index r = 0; r < k; ++r) {
        d(support[r]) = sol(r) - mu(support[r]);
      }
      curvature = d.dot(qp.gram * d);
    }
    const double slope = grad.dot(d);
    if (!(slope < 0.0)) return;
    const double exact = curvature > 0.0
                             ? -slope / (2.0 * curvature)
                             : std::numeric_limits<double>::infinity();

    double boundary = std::numeric_limits<double>::infinity();
    Eigen::Index blocking = -1;
    for (Eigen::Index i : support) {
      if (d(i) < 0.0) {
        const double t = mu(i) / -d(i);
        if (t < boundary) {
          boundary = t;
          blocking = i;
        }
      }
    }
    const double step = std::min(exact, boundary);
    if (!std::isfinite(step)) return;

    const double before = qp.Objective(mu);
    Vector next = mu + step * d;
    const bool blocked = boundary <= exact;
    if (blocked) next(blocking) = 0.0;
    Renormalize(next);
    if (!(qp.Objective(next) <= before)) return;
    mu = next;
    if (!blocked) return;
  }
}

}  // namespace

double SimplexQP::Objective(const Vector& mu) const {
  return mu.dot(gram * mu) - linear.dot(mu);
}

Vector SimplexQP::Gradient(const Vector& mu) const {
  return 2.0 * (gram * mu) - linear;
}

SimplexQP BuildQp(const Instance& instance) {
  SimplexQP qp;
  const Matrix& a = instance.centers();
  qp.gram = a.transpose() * a;
  qp.gram = (0.5 * (qp.gram + qp.gram.transpose())).eval();
  qp.linear = instance.thetas();
  return qp;
}

double DefaultGapTolerance(const SimplexQP& qp) {
  const Eigen::Index m = qp.size();
  const Vector uniform = Vector::Constant(m, 1.0 / static_cast<double>(m));
  return 1e-10 * (1.0 + std::abs(qp.Objective(uniform)));
}

QPResult Solve(const SimplexQP& qp, const QPOptions& options) {
  const Eigen::Index m = qp.size();
  if (m == 0 || qp.gram.rows() != m || qp.gram.cols() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "malformed simplex QP");
  }
  const double tol = options.tol_gap.value_or(DefaultGapTolerance(qp));
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tol_gap must be positive");
  }
  const int max_iter =
      options.max_iter.value_or(200 * static_cast<int>(m) + 10'000);

  QPResult result;
  Vector mu = Vector::Constant(m, 1.0 / static_cast<double>(m));
  int it = 0;
  double gap = 0.0;
  while (true) {
    const Vector grad = qp.Gradient(mu);
    const Eigen::Index j = ArgMin(grad);
    gap = std::max(0.0, grad.dot(mu) - grad(j));
    if (gap <= tol) {
      result.converged = true;
      break;
    }
    if (it >= max_iter) break;

    // Exact line search along e_j - mu; the slope there is -gap.
    const Vector md = qp.gram.col(j) - qp.gram * mu;
    Vector d = -mu;
    d(j) += 1.0;
    const double curvature = d.dot(md);
    const double gamma =
        curvature > 0.0 ? std::min(1.0, gap / (2.0 * curvature)) : 1.0;
    mu *= (1.0 - gamma);
    mu(j) += gamma;
    ++it;
    if (options.refine) RefineOnSupport(qp, mu);
  }

  result.minimizer = mu;
  result.value = qp.Objective(mu);
  result.gap = gap;
  result.iterations = it;
  return result;
}

Vector ProjectSimplex(const Vector& v) {
  const Eigen::Index m = v.size();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "empty vector");
  if (!v.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite vector");
  }
  std::vector<double> u(v.data(), v.data() + m);
  std::sort(u.begin(), u.end(), std::greater<>());
  double prefix = 0.0;
  double tau = 0.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    prefix += u[static_cast<std::size_t>(j)];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - candidate > 0.0) tau = candidate;
  }
  return (v.array() - tau).cwiseMax(0.0).matrix();
}

std::uint64_t SimplexGridSize(std::int64_t m, std::int64_t k) {
  if (m <= 0 || k < 0) return 0;
  unsigned __int128 count = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // C(k + i, i) for i = 1 .. m - 1, each step exact.
  for (std::int64_t i = 1; i < m; ++i) {
    count = count * static_cast<unsigned __int128>(k + i) /
            static_cast<unsigned __int128>(i);
    if (count > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(count);
}

GridOptimum GridOracle(const SimplexQP& qp, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "grid needs k >= 1");
  const Eigen::Index m = qp.size();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "empty QP");
  const std::uint64_t count = SimplexGridSize(m, k);
  if (count > kGridOracleLimit) {
    throw Error(ErrorCode::kCombinatorialBlowup,
                "grid of " + std::to_string(count) + " points exceeds " +
                    std::to_string(kGridOracleLimit));
  }

  GridOptimum best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  Vector mu(m);
  const double inv_k = 1.0 / static_cast<double>(k);

  // Lexicographic enumeration of compositions of k into m parts.
  std::function<void(Eigen::Index, int)> visit = [&](Eigen::Index i,
                                                     int remaining) {
    if (i == m - 1) {
      parts[static_cast<std::size_t>(i)] = remaining;
      for (Eigen::Index r = 0; r < m; ++r) {
        mu(r) = parts[static_cast<std::size_t>(r)] * inv_k;
      }
      const double value = qp.Objective(mu);
      if (value < best.value) {
        best.value = value;
        best.minimizer = mu;
      }
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      parts[static_cast<std::size_t>(i)] = p;
      visit(i + 1, remaining - p);
    }
  };
  visit(0, k);
  return best;
}

}  // namespace seb
