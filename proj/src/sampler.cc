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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seb/random.hpp"
#include "seb/solver.hpp"

namespace seb {
namespace {

double MaxConstraint(const Instance& instance, const Vector& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Ball& b : instance.balls()) {
    worst = std::max(worst, (x - b.center()).squaredNorm() -
                                b.radius() * b.radius());
  }
  return worst;
}

Vector FindSlaterPoint(const Instance& instance,
                       const SamplerOptions& options) {
  if (options.slater_point) {
    if (options.slater_point->size() != instance.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch, "slater point dimension");
    }
    if (!(MaxConstraint(instance, *options.slater_point) < 0.0)) {
      throw Error(ErrorCode::kEmptyInterior,
                  "supplied point is not strictly inside every ball");
    }
    return *options.slater_point;
  }
  const Solution solution = SolveSeb(instance);
  const InteriorCheck check = CheckInterior(instance, solution);
  if (!check.nonempty || !(MaxConstraint(instance, solution.center) < 0.0)) {
    throw Error(ErrorCode::kEmptyInterior,
                "intersection of the balls has empty interior");
  }
  return *check.slater_point;
}

// Feasible chord {x + t u : t in [lo, hi]} through the intersection.
std::pair<double, double> Chord(const Instance& instance, const Vector& x,
                                const Vector& u) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const Ball& ball : instance.balls()) {
    const Vector offset = x - ball.center();
    // t^2 + 2 b t + c <= 0.
    const double b = u.dot(offset);
    const double c = offset.squaredNorm() - ball.radius() * ball.radius();
    const double s = std::sqrt(std::max(0.0, b * b - c));
    const double q = -(b + std::copysign(s, b));
    double t1 = 0.0;
    double t2 = 0.0;
    if (q != 0.0) {
      t1 = q;
      t2 = c / q;
    }
    lo = std::max(lo, std::min(t1, t2));
    hi = std::min(hi, std::max(t1, t2));
  }
  return {lo, hi};
}

void HitAndRunStep(const Instance& instance, Rng& rng, Vector& x) {
  const Vector u = UnitDirection(rng, x.size());
  const auto [lo, hi] = Chord(instance, x, u);
  if (!(hi > lo)) return;
  x += (lo + Uniform01(rng) * (hi - lo)) * u;
}

std::vector<Vector> HitAndRun(const Instance& instance, std::size_t count,
                              std::uint64_t seed, const Vector& start,
                              const SamplerOptions& options) {
  if (options.burn_in < 0 || options.thinning < 1 || options.chains < 1) {
    throw Error(ErrorCode::kInvalidArgument, "invalid hit-and-run settings");
  }
  const auto chains = static_cast<std::size_t>(options.chains);
  std::vector<std::vector<Vector>> per_chain(chains);
  ParallelFor(chains, options.threads, [&](std::size_t k) {
    const std::size_t quota = count / chains + (k < count % chains ? 1 : 0);
    Rng rng(SplitSeed(seed, k));
    Vector x = start;
    for (int i = 0; i < options.burn_in; ++i) HitAndRunStep(instance, rng, x);
    std::vector<Vector>& out = per_chain[k];
    out.reserve(quota);
    for (std::size_t p = 0; p < quota; ++p) {
      for (int i = 0; i < options.thinning; ++i) {
        HitAndRunStep(instance, rng, x);
      }
      out.push_back(x);
    }
  });
  std::vector<Vector> points;
  points.reserve(count);
  for (auto& chain : per_chain) {
    for (Vector& x : chain) points.push_back(std::move(x));
  }
  return points;
}

}  // namespace

const char* SamplingMethodName(SamplingMethod method) {
  return method == SamplingMethod::kRejection ? "Rejection" : "HitAndRun";
}

SampleCloud SampleIntersection(const Instance& instance, std::size_t count,
                               std::uint64_t seed, SamplingMethod method,
                               const SamplerOptions& options) {
  const Vector start = FindSlaterPoint(instance, options);
  SampleCloud cloud;
  cloud.seed = seed;
  cloud.method = method;
  if (method == SamplingMethod::kHitAndRun) {
    cloud.points = HitAndRun(instance, count, seed, start, options);
    return cloud;
  }

  const Ball& smallest = *std::min_element(
      instance.balls().begin(), instance.balls().end(),
      [](const Ball& a, const Ball& b) { return a.radius() < b.radius(); });
  const Eigen::Index n = instance.dimension();
  Rng rng(SplitSeed(seed, 0));
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uint64_t attempts = 0;
  cloud.points.reserve(count);
  while (cloud.points.size() < count) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = smallest.center()(i) + smallest.radius() * box(rng);
    }
    ++attempts;
    if (MaxConstraint(instance, x) <= 0.0) cloud.points.push_back(x);
    if (attempts % 1'000'000 == 0 &&
        static_cast<double>(cloud.points.size()) <
            1e-6 * static_cast<double>(attempts)) {
      // Acceptance stalled; finish with hit-and-run.
      std::vector<Vector> rest = HitAndRun(
          instance, count - cloud.points.size(), seed, start, options);
      for (Vector& p : rest) cloud.points.push_back(std::move(p));
      cloud.method = SamplingMethod::kHitAndRun;
    }
  }
  return cloud;
}

double FarthestDistance(const SampleCloud& cloud, const Vector& center) {
  if (cloud.points.empty()) {
    throw Error(ErrorCode::kEmptyCloud, "empty sample cloud");
  }
  double far = 0.0;
  for (const Vector& p : cloud.points) far = std::max(far, (p - center).norm());
  return far;
}

EnclosingBall CloudMeb(const SampleCloud& cloud, int iterations) {
  if (cloud.points.empty()) {
    throw Error(ErrorCode::kEmptyCloud, "empty sample cloud");
  }
  if (iterations < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative iteration count");
  }
  Vector c = Vector::Zero(cloud.points.front().size());
  for (const Vector& p : cloud.points) c += p;
  c /= static_cast<double>(cloud.points.size());

  auto farthest = [&](const Vector& from) -> const Vector& {
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      const double d = (cloud.points[i] - from).squaredNorm();
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    return cloud.points[best];
  };
  for (int t = 0; t < iterations; ++t) {
    const Vector& p = farthest(c);
    c += (p - c) / static_cast<double>(t + 2);
  }
  return {c, FarthestDistance(cloud, c)};
}

GridMinimum GridMinMaxG(const Instance& instance, int resolution,
                        const Vector& lo, const Vector& hi) {
  const Eigen::Index n = instance.dimension();
  if (n > kGridMaxDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "grid minimization supports n <= 3, got n = " +
                    std::to_string(n));
  }
  if (resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be >= 1");
  }
  if (lo.size() != n || hi.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "box dimension");
  }
  if (!((hi - lo).minCoeff() >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "box has hi < lo");
  }
  const Vector step = (hi - lo) / static_cast<double>(resolution);
  const int per_axis = resolution + 1;
  std::int64_t total = 1;
  for (Eigen::Index i = 0; i < n; ++i) total *= per_axis;

  GridMinimum out;
  out.value = std::numeric_limits<double>::infinity();
  Vector x(n);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    std::int64_t rest = flat;
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = lo(i) + static_cast<double>(rest % per_axis) * step(i);
      rest /= per_axis;
    }
    const double v = MaxConstraint(instance, x);
    if (v < out.value) {
      out.value = v;
      out.argmin = x;
    }
  }

  // max_i g_i is Lipschitz on the box with constant 2 max ||x - a_i||.
  double reach = 0.0;
  for (const Ball& b : instance.balls()) {
    const Vector far = (b.center() - lo).cwiseAbs().cwiseMax(
        (b.center() - hi).cwiseAbs());
    reach = std::max(reach, far.norm());
  }
  out.resolution_bound = 2.0 * reach * 0.5 * step.norm();
  return out;
}

}  // namespace seb
