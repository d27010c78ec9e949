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

#include "seb/jnr.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "Eigen/LU"
#include "seb/linalg.hpp"
#include "seb/random.hpp"

namespace seb {
namespace {

constexpr double kMembershipTolerance = 1e-8;

void CheckLength(const Vector& z, std::size_t m) {
  if (z.size() != static_cast<Eigen::Index>(m) + 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has length " + std::to_string(z.size()) +
                    ", expected " + std::to_string(m + 1));
  }
}

SamplePair DrawPair(std::uint64_t seed, std::size_t index,
                    const Vector& origin, double radius) {
  Rng rng(SplitSeed(seed, index));
  SamplePair pair;
  pair.x = origin + radius * GaussianVector(rng, origin.size());
  pair.y = origin + radius * GaussianVector(rng, origin.size());
  pair.lambda = Uniform01(rng);
  return pair;
}

// Extra pairs first, then `samples` random pairs.
std::vector<SamplePair> CollectPairs(const QuadraticMap& map,
                                     const ProbeOptions& options) {
  if (options.samples < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative sample count");
  }
  auto [origin, radius] = DefaultSamplingFrame(map);
  if (options.origin) origin = *options.origin;
  if (options.radius) radius = *options.radius;
  if (origin.size() != map.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "probe origin dimension");
  }
  std::vector<SamplePair> pairs = options.extra_pairs;
  const std::size_t base = pairs.size();
  pairs.resize(base + static_cast<std::size_t>(options.samples));
  ParallelFor(static_cast<std::size_t>(options.samples), options.threads,
              [&](std::size_t i) {
                pairs[base + i] = DrawPair(options.seed, i, origin, radius);
              });
  return pairs;
}

}  // namespace

QuadraticMap::QuadraticMap(UnitQuadratic target,
                           std::vector<UnitQuadratic> components)
    : target_(std::move(target)), components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "map needs at least one g_i");
  }
  for (const UnitQuadratic& g : components_) {
    if (g.dimension() != target_.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "component dimension differs from target");
    }
  }
}

QuadraticMap QuadraticMap::FromInstance(const Instance& instance,
                                        const Ball& target) {
  return QuadraticMap(BallToQuadratic(target), instance.quadratics());
}

Matrix QuadraticMap::ShiftedCenters() const {
  Matrix out(dimension(), static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    out.col(static_cast<Eigen::Index>(i)) = components_[i].a() - target_.a();
  }
  return out;
}

int QuadraticMap::ShiftedRank() const {
  return NumericalRank(ShiftedCenters());
}

Regime QuadraticMap::ShiftedRegime() const {
  return RegimeFromRank(ShiftedRank(), dimension(), size());
}

Vector EvalMap(const QuadraticMap& map, const Vector& x) {
  Vector z(static_cast<Eigen::Index>(map.size()) + 1);
  z(0) = -map.target()(x);
  for (std::size_t i = 0; i < map.size(); ++i) {
    z(static_cast<Eigen::Index>(i) + 1) = map.components()[i](x);
  }
  return z;
}

bool InLambda(const Vector& z) {
  if (z.size() < 1) return false;
  if (!(z(0) < 0.0)) return false;
  for (Eigen::Index i = 1; i < z.size(); ++i) {
    if (!(z(i) <= 0.0)) return false;
  }
  return true;
}

Vector HTransform(const Vector& z) {
  if (z.size() < 1) throw Error(ErrorCode::kInvalidArgument, "empty point");
  const Eigen::Index m = z.size() - 1;
  Vector y(z.size());
  for (Eigen::Index i = 0; i < m; ++i) y(i) = z(i + 1) + z(0);
  y(m) = -z(0);
  return y;
}

Vector HTransformInverse(const Vector& y) {
  if (y.size() < 1) throw Error(ErrorCode::kInvalidArgument, "empty point");
  const Eigen::Index m = y.size() - 1;
  Vector z(y.size());
  z(0) = -y(m);
  for (Eigen::Index i = 0; i < m; ++i) z(i + 1) = y(i) - z(0);
  return z;
}

double HData::GBar(const Vector& y) const {
  if (y.size() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "gbar argument dimension");
  }
  return y.dot(b * y) - 2.0 * a_bar.dot(y) + theta_bar;
}

HData BuildHData(const QuadraticMap& map) {
  const Eigen::Index n = map.dimension();
  const auto m = static_cast<Eigen::Index>(map.size());
  const Matrix shifted = map.ShiftedCenters();
  if (m != n || NumericalRank(shifted) != n) {
    throw Error(ErrorCode::kSingularMatrix,
                "H data needs rank{a_i - a} = n = m");
  }
  HData h;
  h.a = -2.0 * shifted.transpose();
  Eigen::FullPivLU<Matrix> lu(h.a);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kSingularMatrix, "A is not invertible");
  }
  h.a_inv = lu.inverse();
  h.theta_hat.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    h.theta_hat(i) =
        map.components()[static_cast<std::size_t>(i)].theta() -
        map.target().theta();
  }
  h.b = h.a_inv.transpose() * h.a_inv;
  h.b = (0.5 * (h.b + h.b.transpose())).eval();
  const Vector& a = map.target().a();
  h.a_bar = h.b * h.theta_hat + h.a_inv.transpose() * a;
  h.theta_bar = h.theta_hat.dot(h.b * h.theta_hat) +
                2.0 * a.dot(h.a_inv * h.theta_hat) + map.target().theta();

  // gbar(A x + theta_hat) must reproduce g(x).
  auto [origin, radius] = DefaultSamplingFrame(map);
  Rng rng(SplitSeed(0x5eb, 0));
  for (int k = 0; k < 100; ++k) {
    const Vector x = origin + radius * GaussianVector(rng, n);
    const double expected = map.target()(x);
    const double got = h.GBar(h.Image(x));
    const double scale =
        1.0 + std::abs(expected) + x.squaredNorm() + a.squaredNorm();
    if (std::abs(got - expected) > 1e-8 * scale) {
      throw Error(ErrorCode::kValidationFailure,
                  "gbar(Ax + theta_hat) != g(x): " + std::to_string(got) +
                      " vs " + std::to_string(expected));
    }
  }
  return h;
}

MembershipVerdict MembershipG(const QuadraticMap& map, const Vector& z) {
  const std::size_t m = map.size();
  CheckLength(z, m);
  const Eigen::Index n = map.dimension();
  const UnitQuadratic& g = map.target();

  // g_i(x) - g(x) = -2 (a_i - a)'x + theta_i - theta = z_i + z_0.
  Matrix a(static_cast<Eigen::Index>(m), n);
  Vector rhs(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const UnitQuadratic& gi = map.components()[i];
    a.row(r) = -2.0 * (gi.a() - g.a()).transpose();
    rhs(r) = z(r + 1) + z(0) - (gi.theta() - g.theta());
  }
  const AffineSolutionSet fiber = SolveAffine(a, rhs, kMembershipTolerance);

  MembershipVerdict verdict;
  if (!fiber.consistent) {
    verdict.margin = fiber.residual;
    return verdict;
  }
  const AffineMinimum lowest = MinQuadraticOnAffine(g, fiber);
  const double level = -z(0);
  const double slack = kMembershipTolerance * (1.0 + std::abs(z(0)));
  verdict.margin = lowest.value - level;

  if (fiber.nullspace_basis.cols() == 0) {
    verdict.member = std::abs(verdict.margin) <= slack;
    if (verdict.member) verdict.witness = lowest.argmin;
    return verdict;
  }
  verdict.member = lowest.value <= level + slack;
  if (verdict.member) {
    // Along a unit kernel direction u, g(x* + s u) = g(x*) + s^2.
    const double s = std::sqrt(std::max(0.0, level - lowest.value));
    verdict.witness = lowest.argmin + s * fiber.nullspace_basis.col(0);
  }
  return verdict;
}

MembershipVerdict MembershipGBullet(const QuadraticMap& map,
                                    const Vector& z) {
  CheckLength(z, map.size());
  switch (map.ShiftedRegime()) {
    case Regime::kConvexCase:
      return MembershipG(map, z);
    case Regime::kCriticalCase:
      return MembershipGBullet(BuildHData(map), z);
    case Regime::kUnsupported:
      break;
  }
  throw Error(ErrorCode::kUnsupportedRegime,
              "no exact bullet-set test when rank{a_i - a} = n < m");
}

MembershipVerdict MembershipGBullet(const HData& data, const Vector& z) {
  CheckLength(z, static_cast<std::size_t>(data.a.rows()));
  const Vector h = HTransform(z);
  const Eigen::Index m = h.size() - 1;
  const double t = h(m);
  const double value = data.GBar(h.head(m));
  MembershipVerdict verdict;
  verdict.margin = value - t;
  verdict.member = value <= t + kMembershipTolerance * (1.0 + std::abs(t));
  return verdict;
}

Vector BulletCombine(const Vector& p, const Vector& q, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda outside [0, 1]");
  }
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "points differ in length");
  }
  return lambda * p + (1.0 - lambda) * q;
}

std::pair<Vector, double> DefaultSamplingFrame(const QuadraticMap& map) {
  Vector mean = map.target().a();
  for (const UnitQuadratic& g : map.components()) mean += g.a();
  mean /= static_cast<double>(map.size() + 1);
  double spread = (map.target().a() - mean).norm();
  for (const UnitQuadratic& g : map.components()) {
    spread = std::max(spread, (g.a() - mean).norm());
  }
  if (!(spread > 0.0)) spread = 1.0;
  return {mean, 3.0 * spread};
}

ConvexityReport ConvexityProbe(const QuadraticMap& map,
                               const ProbeOptions& options) {
  const std::vector<SamplePair> pairs = CollectPairs(map, options);
  std::vector<std::optional<Counterexample>> found(pairs.size());
  ParallelFor(pairs.size(), options.threads, [&](std::size_t i) {
    const SamplePair& p = pairs[i];
    const Vector z = BulletCombine(EvalMap(map, p.x), EvalMap(map, p.y),
                                   p.lambda);
    if (!MembershipG(map, z).member) {
      found[i] = Counterexample{p.x, p.y, p.lambda, z};
    }
  });
  ConvexityReport report;
  report.tested = pairs.size();
  for (auto& c : found) {
    if (c) report.counterexamples.push_back(std::move(*c));
  }
  return report;
}

SeparationReport SeparationProbe(const QuadraticMap& map,
                                 const ProbeOptions& options) {
  if (map.ShiftedRegime() == Regime::kUnsupported) {
    throw Error(ErrorCode::kUnsupportedRegime,
                "separation probe needs rank{a_i - a} < n or = n = m");
  }
  const std::vector<SamplePair> pairs = CollectPairs(map, options);
  struct Hits {
    std::vector<Vector> g;
    std::optional<Vector> bullet;
  };
  std::vector<Hits> hits(pairs.size());
  ParallelFor(pairs.size(), options.threads, [&](std::size_t i) {
    const SamplePair& p = pairs[i];
    const Vector zx = EvalMap(map, p.x);
    const Vector zy = EvalMap(map, p.y);
    if (InLambda(zx)) hits[i].g.push_back(zx);
    if (InLambda(zy)) hits[i].g.push_back(zy);
    Vector w = BulletCombine(zx, zy, p.lambda);
    if (InLambda(w)) hits[i].bullet = std::move(w);
  });

  SeparationReport report;
  report.tested = pairs.size() + options.extra_points.size();
  for (const Vector& x : options.extra_points) {
    Vector z = EvalMap(map, x);
    if (InLambda(z)) report.g_hits_lambda.push_back(std::move(z));
  }
  for (Hits& h : hits) {
    for (Vector& z : h.g) report.g_hits_lambda.push_back(std::move(z));
    if (h.bullet) report.bullet_hits_lambda.push_back(std::move(*h.bullet));
  }
  return report;
}

AffineMap HTransformMap(std::size_t m) {
  const auto dim = static_cast<Eigen::Index>(m) + 1;
  AffineMap h{Matrix::Zero(dim, dim), Vector::Zero(dim)};
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    h.linear(i, i + 1) = 1.0;
    h.linear(i, 0) = 1.0;
  }
  h.linear(dim - 1, 0) = -1.0;
  return h;
}

bool AffineInvarianceCheck(
    const std::vector<Vector>& points, const AffineMap& map,
    const std::vector<std::tuple<std::size_t, std::size_t, double>>& combos) {
  const Eigen::Index d = map.linear.rows();
  if (map.linear.cols() != d || map.offset.size() != d) {
    throw Error(ErrorCode::kDimensionMismatch, "affine map is not square");
  }
  if (NumericalRank(map.linear) != d) {
    throw Error(ErrorCode::kSingularTransform, "affine map is singular");
  }
  for (const auto& [i, j, lambda] : combos) {
    if (i >= points.size() || j >= points.size()) {
      throw Error(ErrorCode::kInvalidArgument, "combination index out of range");
    }
    const Vector lhs = map(BulletCombine(points[i], points[j], lambda));
    const Vector rhs = BulletCombine(map(points[i]), map(points[j]), lambda);
    const double scale = 1.0 + map(points[i]).norm() + map(points[j]).norm();
    if ((lhs - rhs).norm() > 1e-9 * scale) return false;
  }
  return true;
}

}  // namespace seb
