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

#ifndef SEB_JNR_HPP_
#define SEB_JNR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "seb/types.hpp"

namespace seb {

// G = (-g, g_1, ..., g_m) : R^n -> R^{m+1}, g the target quadratic and g_i the
// constraint quadratics. Its image G(R^n) is the joint numerical range.
class QuadraticMap {
 public:
  QuadraticMap(UnitQuadratic target, std::vector<UnitQuadratic> components);

  static QuadraticMap FromInstance(const Instance& instance,
                                   const Ball& target);

  const UnitQuadratic& target() const { return target_; }
  const std::vector<UnitQuadratic>& components() const { return components_; }
  Eigen::Index dimension() const { return target_.dimension(); }
  std::size_t size() const { return components_.size(); }

  // n x m matrix with columns a_i - a.
  Matrix ShiftedCenters() const;
  int ShiftedRank() const;
  // Regime of rank{a_i - a}.
  Regime ShiftedRegime() const;

 private:
  UnitQuadratic target_;
  std::vector<UnitQuadratic> components_;
};

// (-g(x), g_1(x), ..., g_m(x)).
Vector EvalMap(const QuadraticMap& map, const Vector& x);

// z_0 < 0 and z_i <= 0 for i >= 1, compared exactly.
bool InLambda(const Vector& z);

// (z_0, ..., z_m) -> (z_1 + z_0, ..., z_m + z_0, -z_0) and its inverse.
Vector HTransform(const Vector& z);
Vector HTransformInverse(const Vector& y);

// Data flattening H(G(R^n)) into the graph {(y, gbar(y))} when
// rank{a_i - a} = n = m. Rows of `a` are -2 (a_i - a)'.
struct HData {
  Matrix a;
  Matrix a_inv;
  Vector theta_hat;  // theta_i - theta
  Matrix b;          // a^{-T} a^{-1}, positive definite
  Vector a_bar;
  double theta_bar = 0.0;

  // y = A x + theta_hat.
  Vector Image(const Vector& x) const { return a * x + theta_hat; }
  // gbar(y) = y'By - 2 a_bar'y + theta_bar.
  double GBar(const Vector& y) const;
};

// Throws kSingularMatrix unless rank{a_i - a} = n = m. Throws
// kValidationFailure if gbar(A x + theta_hat) = g(x) fails at random x.
HData BuildHData(const QuadraticMap& map);

struct MembershipVerdict {
  bool member = false;
  std::optional<Vector> witness;
  // Membership in G: min of g over the fiber minus -z_0, or the affine
  // residual when the fiber is empty. Membership in the bullet set:
  // gbar(y) - t.
  double margin = 0.0;
};

// Exact test of z in G(R^n). The fiber {x : g_i(x) - g(x) = z_i + z_0} is
// affine and g is strictly convex on it, so the level -z_0 is attained iff
// the fiber is nonempty and its minimum of g is at most -z_0.
MembershipVerdict MembershipG(const QuadraticMap& map, const Vector& z);

// Membership in the set of pairwise convex combinations of G(R^n). Delegates
// to MembershipG when rank{a_i - a} < n, uses the epigraph of gbar when
// rank{a_i - a} = n = m, and throws kUnsupportedRegime otherwise.
MembershipVerdict MembershipGBullet(const QuadraticMap& map, const Vector& z);
MembershipVerdict MembershipGBullet(const HData& data, const Vector& z);

// lambda p + (1 - lambda) q; throws kInvalidArgument unless 0 <= lambda <= 1.
Vector BulletCombine(const Vector& p, const Vector& q, double lambda);

struct SamplePair {
  Vector x;
  Vector y;
  double lambda = 0.5;
};

struct ProbeOptions {
  int samples = 10'000;
  std::uint64_t seed = 0;
  // Gaussian draws origin + radius * N(0, I). Defaults: the mean of all
  // centers and three times their spread about it.
  std::optional<Vector> origin;
  std::optional<double> radius;
  int threads = 1;
  // Evaluated before the random samples.
  std::vector<SamplePair> extra_pairs;
  std::vector<Vector> extra_points;
};

// Default sampling origin and radius for a map.
std::pair<Vector, double> DefaultSamplingFrame(const QuadraticMap& map);

struct Counterexample {
  Vector x;
  Vector y;
  double lambda = 0.0;
  Vector z;
};

struct ConvexityReport {
  std::size_t tested = 0;
  std::vector<Counterexample> counterexamples;
};

// Records combinations lambda G(x) + (1 - lambda) G(y) that fall outside
// G(R^n). Any entry proves non-convexity.
ConvexityReport ConvexityProbe(const QuadraticMap& map,
                               const ProbeOptions& options);

struct SeparationReport {
  std::size_t tested = 0;
  std::vector<Vector> g_hits_lambda;
  std::vector<Vector> bullet_hits_lambda;

  // An empty first list must imply an empty second list.
  bool ImplicationHolds() const {
    return !g_hits_lambda.empty() || bullet_hits_lambda.empty();
  }
};

// Samples G(R^n) and its pairwise combinations and lists points in Lambda.
// Throws kUnsupportedRegime when rank{a_i - a} = n < m.
SeparationReport SeparationProbe(const QuadraticMap& map,
                                 const ProbeOptions& options);

struct AffineMap {
  Matrix linear;
  Vector offset;

  Vector operator()(const Vector& x) const { return linear * x + offset; }
};

// The H transform on R^{m+1} as an affine map.
AffineMap HTransformMap(std::size_t m);

// Checks L(lambda p_i + (1 - lambda) p_j) = lambda L(p_i) + (1 - lambda) L(p_j)
// for each (i, j, lambda). Throws kSingularTransform for non-invertible L.
bool AffineInvarianceCheck(
    const std::vector<Vector>& points, const AffineMap& map,
    const std::vector<std::tuple<std::size_t, std::size_t, double>>& combos);

}  // namespace seb

#endif  // SEB_JNR_HPP_
