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

#ifndef SEB_SAMPLER_HPP_
#define SEB_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seb/types.hpp"

namespace seb {

enum class SamplingMethod { kRejection, kHitAndRun };

const char* SamplingMethodName(SamplingMethod method);

struct SampleCloud {
  std::vector<Vector> points;
  std::uint64_t seed = 0;
  SamplingMethod method = SamplingMethod::kHitAndRun;
};

struct SamplerOptions {
  int burn_in = 100;
  int thinning = 5;
  int chains = 1;
  int threads = 1;
  // Strictly interior start for hit-and-run. When absent the instance is
  // solved and its center is used.
  std::optional<Vector> slater_point;
};

// Points of the intersection of the instance's balls. Rejection samples the
// bounding box of the smallest ball and falls back to hit-and-run once the
// acceptance rate drops below 1e-6. Throws kEmptyInterior.
SampleCloud SampleIntersection(const Instance& instance, std::size_t count,
                               std::uint64_t seed, SamplingMethod method,
                               const SamplerOptions& options = {});

// max_x ||x - center||. Throws kEmptyCloud.
double FarthestDistance(const SampleCloud& cloud, const Vector& center);

struct EnclosingBall {
  Vector center;
  double radius = 0.0;
};

// Core-set iteration c <- c + (p_far - c) / (t + 2) from the centroid. After
// t iterations the radius is within a factor 1 + 1/sqrt(t) of the cloud's
// minimum enclosing ball. Throws kEmptyCloud.
EnclosingBall CloudMeb(const SampleCloud& cloud, int iterations);

inline constexpr Eigen::Index kGridMaxDimension = 3;

// Exhaustive minimum of max_i g_i(x) over a (resolution + 1)^n lattice of the
// box [lo, hi]. Throws kDimensionTooLarge for n > 3.
struct GridMinimum {
  double value = 0.0;
  Vector argmin;
  // Bound on value - (true minimum over the box) from the lattice spacing.
  double resolution_bound = 0.0;
};

GridMinimum GridMinMaxG(const Instance& instance, int resolution,
                        const Vector& lo, const Vector& hi);

}  // namespace seb

#endif  // SEB_SAMPLER_HPP_
