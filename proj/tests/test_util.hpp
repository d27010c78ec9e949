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

// Instance generators and independent reference computations shared by the
// unit tests and the acceptance runner.

#ifndef SEB_TESTS_TEST_UTIL_HPP_
#define SEB_TESTS_TEST_UTIL_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "seb/types.hpp"

namespace seb::testing {

inline Instance MakeInstance(const std::vector<std::vector<double>>& centers,
                             const std::vector<double>& radii) {
  std::vector<Ball> balls;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    balls.emplace_back(
        Eigen::Map<const Vector>(centers[i].data(),
                                 static_cast<Eigen::Index>(centers[i].size())),
        radii[i]);
  }
  return Instance(std::move(balls));
}

inline Instance LensInstance() {
  return MakeInstance({{-1, 0}, {1, 0}}, {std::sqrt(2.0), std::sqrt(2.0)});
}

inline Instance CriticalInstance() {
  return MakeInstance({{1, 0}, {0, 1}}, {2, 2});
}

inline Instance DisjointInstance() {
  return MakeInstance({{-5, 0}, {5, 0}}, {1, 1});
}

// Balls whose centers come from `centers` (columns), each containing a common
// point p with slack drawn from [0.5, 1.5].
inline Instance BallsAroundPoint(const Matrix& centers, const Vector& p,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> slack(0.5, 1.5);
  std::vector<Ball> balls;
  for (Eigen::Index j = 0; j < centers.cols(); ++j) {
    balls.emplace_back(centers.col(j), (centers.col(j) - p).norm() + slack(rng));
  }
  return Instance(std::move(balls));
}

inline Matrix GaussianMatrix(Eigen::Index rows, Eigen::Index cols,
                             std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

// n = m, i.i.d. normal centers, common interior point.
inline Instance RandomSquareInstance(int n, std::mt19937_64& rng) {
  const Matrix centers = GaussianMatrix(n, n, rng);
  const Vector p = 0.5 * GaussianMatrix(n, 1, rng).col(0);
  return BallsAroundPoint(centers, p, rng);
}

// m centers in R^n confined to a random affine subspace of dimension d.
inline Instance RandomFlatInstance(int n, int m, int d, std::mt19937_64& rng) {
  const Matrix basis = GaussianMatrix(n, d, rng);
  const Vector offset = GaussianMatrix(n, 1, rng).col(0);
  Matrix centers = basis * GaussianMatrix(d, m, rng);
  centers.colwise() += offset;
  const Vector p = offset + basis * (0.3 * GaussianMatrix(d, 1, rng).col(0));
  return BallsAroundPoint(centers, p, rng);
}

inline Matrix RandomRotation(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(GaussianMatrix(n, n, rng));
  Matrix q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

inline Instance TransformInstance(const Instance& instance,
                                  const Matrix& rotation,
                                  const Vector& shift) {
  std::vector<Ball> balls;
  for (const Ball& b : instance.balls()) {
    balls.emplace_back(rotation * b.center() + shift, b.radius());
  }
  return Instance(std::move(balls));
}

// max_i (||x - a_i||^2 - r_i^2), computed from the balls directly.
inline double MaxConstraint(const Instance& instance, const Vector& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Ball& b : instance.balls()) {
    worst = std::max(worst, (x - b.center()).squaredNorm() -
                                b.radius() * b.radius());
  }
  return worst;
}

struct ReferenceQp {
  double value = std::numeric_limits<double>::infinity();
  Vector mu;
};

// Exact minimum of ||A mu||^2 - c'mu over the simplex by enumerating every
// support set and solving its equality-constrained KKT system. Exponential
// in m; intended for m <= 10.
inline ReferenceQp EnumerateQpOptimum(const Instance& instance) {
  const Matrix& a = instance.centers();
  const Eigen::Index m = a.cols();
  Vector c(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    c(i) = a.col(i).squaredNorm() -
           instance.ball(static_cast<std::size_t>(i)).radius() *
               instance.ball(static_cast<std::size_t>(i)).radius();
  }
  const Matrix gram = a.transpose() * a;
  ReferenceQp best;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(support.size());
    Matrix kkt = Matrix::Zero(k + 1, k + 1);
    Vector rhs = Vector::Zero(k + 1);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index s = 0; s < k; ++s) {
        kkt(r, s) = 2.0 * gram(support[r], support[s]);
      }
      kkt(r, k) = 1.0;
      kkt(k, r) = 1.0;
      rhs(r) = c(support[r]);
    }
    rhs(k) = 1.0;
    const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    if ((kkt * sol - rhs).norm() > 1e-9 * (1.0 + rhs.norm())) continue;
    Vector mu = Vector::Zero(m);
    bool feasible = true;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (sol(r) < -1e-12) feasible = false;
      mu(support[r]) = std::max(sol(r), 0.0);
    }
    if (!feasible) continue;
    mu /= mu.sum();
    const double value = (a * mu).squaredNorm() - c.dot(mu);
    if (value < best.value) {
      best.value = value;
      best.mu = mu;
    }
  }
  return best;
}

// Smallest eigenvalue of [[alpha I, b], [b', beta]].
inline double ArrowheadMinEigenvalue(double alpha, const Vector& b,
                                     double beta) {
  const Eigen::Index n = b.size();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n).diagonal().setConstant(alpha);
  m.topRightCorner(n, 1) = b;
  m.bottomLeftCorner(1, n) = b.transpose();
  m(n, n) = beta;
  return Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues().minCoeff();
}

// Smallest ||F(x) - z||^2 found by Gauss-Newton from a grid of starts, F(x)
// given as (-g(x), g_1(x), ..., g_m(x)) for the target ball (c, r) and the
// instance balls. A zero means z is attained.
inline double ImageDistanceSquared(const Instance& instance,
                                   const Vector& target_center,
                                   double target_radius, const Vector& z,
                                   const Vector& lo, const Vector& hi,
                                   int starts_per_axis) {
  const Eigen::Index n = target_center.size();
  const auto m = static_cast<Eigen::Index>(instance.size());
  auto residual = [&](const Vector& x, Vector* r, Matrix* jac) {
    r->resize(m + 1);
    jac->resize(m + 1, n);
    (*r)(0) = -((x - target_center).squaredNorm() -
                target_radius * target_radius) -
              z(0);
    jac->row(0) = -2.0 * (x - target_center).transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Ball& b = instance.ball(static_cast<std::size_t>(i));
      (*r)(i + 1) = (x - b.center()).squaredNorm() -
                    b.radius() * b.radius() - z(i + 1);
      jac->row(i + 1) = 2.0 * (x - b.center()).transpose();
    }
  };
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Vector x(n);
    for (Eigen::Index d = 0; d < n; ++d) {
      x(d) = lo(d) + (hi(d) - lo(d)) * (idx[static_cast<std::size_t>(d)] + 0.5) /
                         starts_per_axis;
    }
    Vector r;
    Matrix jac;
    double lambda = 1e-3;
    residual(x, &r, &jac);
    double f = r.squaredNorm();
    for (int it = 0; it < 200 && f > 1e-30; ++it) {
      const Matrix jtj = jac.transpose() * jac;
      const Vector step =
          (jtj + lambda * Matrix::Identity(n, n)).ldlt().solve(-jac.transpose() * r);
      Vector r_new;
      Matrix jac_new;
      residual(x + step, &r_new, &jac_new);
      const double f_new = r_new.squaredNorm();
      if (f_new < f) {
        x += step;
        r = r_new;
        jac = jac_new;
        f = f_new;
        lambda = std::max(lambda * 0.3, 1e-12);
      } else {
        lambda *= 10.0;
        if (lambda > 1e12) break;
      }
    }
    best = std::min(best, f);
    Eigen::Index d = 0;
    while (d < n && ++idx[static_cast<std::size_t>(d)] == starts_per_axis) {
      idx[static_cast<std::size_t>(d)] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return best;
}

}  // namespace seb::testing

#endif  // SEB_TESTS_TEST_UTIL_HPP_
