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

#include "seb/seb.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "seb/io.hpp"
#include "seb/jnr.hpp"
#include "seb/linalg.hpp"
#include "seb/random.hpp"
#include "seb/sampler.hpp"
#include "seb/simplex_qp.hpp"
#include "seb/solver.hpp"

struct seb_instance {
  seb::InstanceFile file;
};

struct seb_solution {
  seb::Solution solution;
};

struct seb_map {
  seb::QuadraticMap map;
};

namespace {

thread_local std::string last_error;

seb_status FromCode(seb::ErrorCode code) {
  using seb::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return SEB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch:
      return SEB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kParse:
      return SEB_ERR_PARSE;
    case ErrorCode::kNonConvergence:
      return SEB_ERR_NON_CONVERGENCE;
    case ErrorCode::kEmptyInterior:
      return SEB_ERR_EMPTY_INTERIOR;
    case ErrorCode::kUnsupportedRegime:
      return SEB_ERR_UNSUPPORTED_REGIME;
    case ErrorCode::kSingularMatrix:
      return SEB_ERR_SINGULAR_MATRIX;
    case ErrorCode::kSingularTransform:
      return SEB_ERR_SINGULAR_TRANSFORM;
    case ErrorCode::kCombinatorialBlowup:
      return SEB_ERR_COMBINATORIAL_BLOWUP;
    case ErrorCode::kDimensionTooLarge:
      return SEB_ERR_DIMENSION_TOO_LARGE;
    case ErrorCode::kValidationFailure:
      return SEB_ERR_VALIDATION_FAILURE;
    case ErrorCode::kEmptyCloud:
      return SEB_ERR_EMPTY_CLOUD;
  }
  return SEB_ERR_INTERNAL;
}

seb_status Fail(seb_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
seb_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const seb::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SEB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SEB_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SEB_ERR_INTERNAL, "unknown error");
  }
}

void Require(bool condition, const char* what) {
  if (!condition) {
    throw seb::Error(seb::ErrorCode::kInvalidArgument,
                     std::string("null argument: ") + what);
  }
}

seb::Vector ToVector(const double* data, std::size_t n) {
  return Eigen::Map<const seb::Vector>(data, static_cast<Eigen::Index>(n));
}

void CopyOut(const seb::Vector& v, double* out) {
  std::copy(v.data(), v.data() + v.size(), out);
}

seb_status WriteString(const std::string& s, char* buffer, size_t* size) {
  Require(size != nullptr, "size");
  const size_t needed = s.size() + 1;
  const size_t capacity = *size;
  *size = needed;
  if (buffer == nullptr) return SEB_OK;
  if (capacity < needed) {
    return Fail(SEB_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(capacity) + " bytes, " +
                    std::to_string(needed) + " needed");
  }
  std::memcpy(buffer, s.c_str(), needed);
  return SEB_OK;
}

seb_regime ToC(seb::Regime regime) {
  switch (regime) {
    case seb::Regime::kConvexCase:
      return SEB_REGIME_CONVEX;
    case seb::Regime::kCriticalCase:
      return SEB_REGIME_CRITICAL;
    case seb::Regime::kUnsupported:
      return SEB_REGIME_UNSUPPORTED;
  }
  return SEB_REGIME_UNSUPPORTED;
}

seb_solution_status ToC(seb::SolutionStatus status) {
  switch (status) {
    case seb::SolutionStatus::kCertifiedOptimal:
      return SEB_SOLUTION_CERTIFIED_OPTIMAL;
    case seb::SolutionStatus::kUpperBoundOnly:
      return SEB_SOLUTION_UPPER_BOUND_ONLY;
    case seb::SolutionStatus::kEmptyInterior:
      return SEB_SOLUTION_EMPTY_INTERIOR;
    case seb::SolutionStatus::kDegeneratePoint:
      return SEB_SOLUTION_DEGENERATE_POINT;
  }
  return SEB_SOLUTION_UPPER_BOUND_ONLY;
}

seb::SampleCloud CloudFrom(const double* points, size_t count,
                           size_t dimension) {
  Require(points != nullptr || count == 0, "points");
  seb::SampleCloud cloud;
  cloud.points.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    cloud.points.push_back(ToVector(points + i * dimension, dimension));
  }
  return cloud;
}

seb::ProbeOptions ProbeFrom(const seb_map* map,
                            const seb_probe_options* options) {
  Require(options != nullptr, "options");
  seb::ProbeOptions out;
  out.samples = static_cast<int>(options->samples);
  out.seed = options->seed;
  if (options->radius > 0.0) out.radius = options->radius;
  out.threads = options->threads;
  const auto n = static_cast<size_t>(map->map.dimension());
  for (size_t i = 0; i < options->extra_count; ++i) {
    Require(options->extra_points != nullptr, "extra_points");
    out.extra_points.push_back(ToVector(options->extra_points + i * n, n));
  }
  return out;
}

}  // namespace

extern "C" {

const char* seb_status_name(seb_status status) {
  switch (status) {
    case SEB_OK:
      return "ok";
    case SEB_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case SEB_ERR_DIMENSION_MISMATCH:
      return "dimension_mismatch";
    case SEB_ERR_PARSE:
      return "parse_error";
    case SEB_ERR_NON_CONVERGENCE:
      return "non_convergence";
    case SEB_ERR_EMPTY_INTERIOR:
      return "empty_interior";
    case SEB_ERR_UNSUPPORTED_REGIME:
      return "unsupported_regime";
    case SEB_ERR_SINGULAR_MATRIX:
      return "singular_matrix";
    case SEB_ERR_SINGULAR_TRANSFORM:
      return "singular_transform";
    case SEB_ERR_COMBINATORIAL_BLOWUP:
      return "combinatorial_blowup";
    case SEB_ERR_DIMENSION_TOO_LARGE:
      return "dimension_too_large";
    case SEB_ERR_VALIDATION_FAILURE:
      return "validation_failure";
    case SEB_ERR_EMPTY_CLOUD:
      return "empty_cloud";
    case SEB_ERR_BUFFER_TOO_SMALL:
      return "buffer_too_small";
    case SEB_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* seb_last_error_message(void) { return last_error.c_str(); }

seb_status seb_instance_create(size_t dimension, size_t count,
                               const double* centers, const double* radii,
                               seb_instance** out) {
  return Guard([&] {
    Require(centers != nullptr, "centers");
    Require(radii != nullptr, "radii");
    Require(out != nullptr, "out");
    std::vector<seb::Ball> balls;
    balls.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      balls.emplace_back(ToVector(centers + i * dimension, dimension),
                         radii[i]);
    }
    *out = new seb_instance{{seb::Instance(std::move(balls)), std::nullopt}};
    return SEB_OK;
  });
}

seb_status seb_instance_from_json(const char* text, seb_instance** out) {
  return Guard([&] {
    Require(text != nullptr, "text");
    Require(out != nullptr, "out");
    *out = new seb_instance{seb::ParseInstanceJson(text)};
    return SEB_OK;
  });
}

seb_status seb_instance_read_file(const char* path, seb_instance** out) {
  return Guard([&] {
    Require(path != nullptr, "path");
    Require(out != nullptr, "out");
    *out = new seb_instance{seb::ReadInstanceFile(path)};
    return SEB_OK;
  });
}

seb_status seb_instance_to_json(const seb_instance* instance, int pretty,
                                char* buffer, size_t* size) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    return WriteString(seb::DumpInstanceJson(instance->file, pretty != 0),
                       buffer, size);
  });
}

void seb_instance_destroy(seb_instance* instance) { delete instance; }

size_t seb_instance_dimension(const seb_instance* instance) {
  return instance ? static_cast<size_t>(instance->file.instance.dimension())
                  : 0;
}

size_t seb_instance_count(const seb_instance* instance) {
  return instance ? instance->file.instance.size() : 0;
}

int seb_instance_has_target(const seb_instance* instance) {
  return instance && instance->file.target ? 1 : 0;
}

seb_status seb_instance_target(const seb_instance* instance, double* center,
                               double* radius) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(center != nullptr, "center");
    Require(radius != nullptr, "radius");
    if (!instance->file.target) {
      return Fail(SEB_ERR_INVALID_ARGUMENT, "instance has no target ball");
    }
    CopyOut(instance->file.target->center(), center);
    *radius = instance->file.target->radius();
    return SEB_OK;
  });
}

seb_status seb_classify(const seb_instance* instance, int* rank_centers,
                        seb_regime* regime) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    const seb::RankRegime r = seb::Classify(instance->file.instance);
    if (rank_centers) *rank_centers = r.rank_centers;
    if (regime) *regime = ToC(r.regime);
    return SEB_OK;
  });
}

seb_status seb_numerical_rank(const double* vectors, size_t count,
                              size_t dimension, double tol, int* rank) {
  return Guard([&] {
    Require(vectors != nullptr || count == 0, "vectors");
    Require(rank != nullptr, "rank");
    seb::Matrix columns(static_cast<Eigen::Index>(dimension),
                        static_cast<Eigen::Index>(count));
    for (size_t j = 0; j < count; ++j) {
      columns.col(static_cast<Eigen::Index>(j)) =
          ToVector(vectors + j * dimension, dimension);
    }
    *rank = seb::NumericalRank(
        columns, tol > 0.0 ? tol : seb::kDefaultRankTolerance);
    return SEB_OK;
  });
}

void seb_solve_options_init(seb_solve_options* options) {
  if (!options) return;
  options->tol_gap = 0.0;
  options->max_iter = 0;
  options->refine = 1;
}

seb_status seb_solve(const seb_instance* instance,
                     const seb_solve_options* options, seb_solution** out) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(out != nullptr, "out");
    seb::SolveOptions opts;
    if (options) {
      if (options->tol_gap > 0.0) opts.qp.tol_gap = options->tol_gap;
      if (options->max_iter > 0) opts.qp.max_iter = options->max_iter;
      opts.qp.refine = options->refine != 0;
    }
    *out = new seb_solution{seb::SolveSeb(instance->file.instance, opts)};
    if (!(*out)->solution.converged) {
      return Fail(SEB_ERR_NON_CONVERGENCE,
                  "Frank-Wolfe stopped at max_iter with gap " +
                      std::to_string((*out)->solution.fw_gap));
    }
    return SEB_OK;
  });
}

void seb_solution_destroy(seb_solution* solution) { delete solution; }

seb_status seb_solution_get_info(const seb_solution* solution,
                                 seb_solution_info* info) {
  return Guard([&] {
    Require(solution != nullptr, "solution");
    Require(info != nullptr, "info");
    const seb::Solution& s = solution->solution;
    info->status = ToC(s.status);
    info->radius = s.radius;
    info->qp_value = s.qp_value;
    info->fw_gap = s.fw_gap;
    info->iterations = s.iterations;
    info->converged = s.converged ? 1 : 0;
    info->rank_centers = s.regime.rank_centers;
    info->rank_shifted = s.regime.rank_shifted.value_or(-1);
    info->regime = ToC(s.regime.regime);
    return SEB_OK;
  });
}

seb_status seb_solution_center(const seb_solution* solution, double* center) {
  return Guard([&] {
    Require(solution != nullptr, "solution");
    Require(center != nullptr, "center");
    CopyOut(solution->solution.center, center);
    return SEB_OK;
  });
}

seb_status seb_solution_multipliers(const seb_solution* solution,
                                    double* multipliers) {
  return Guard([&] {
    Require(solution != nullptr, "solution");
    Require(multipliers != nullptr, "multipliers");
    CopyOut(solution->solution.multipliers, multipliers);
    return SEB_OK;
  });
}

const char* seb_solution_status_name(seb_solution_status status) {
  switch (status) {
    case SEB_SOLUTION_CERTIFIED_OPTIMAL:
      return seb::SolutionStatusName(seb::SolutionStatus::kCertifiedOptimal);
    case SEB_SOLUTION_UPPER_BOUND_ONLY:
      return seb::SolutionStatusName(seb::SolutionStatus::kUpperBoundOnly);
    case SEB_SOLUTION_EMPTY_INTERIOR:
      return seb::SolutionStatusName(seb::SolutionStatus::kEmptyInterior);
    case SEB_SOLUTION_DEGENERATE_POINT:
      return seb::SolutionStatusName(seb::SolutionStatus::kDegeneratePoint);
  }
  return "Unknown";
}

const char* seb_regime_name(seb_regime regime) {
  switch (regime) {
    case SEB_REGIME_CONVEX:
      return seb::RegimeName(seb::Regime::kConvexCase);
    case SEB_REGIME_CRITICAL:
      return seb::RegimeName(seb::Regime::kCriticalCase);
    case SEB_REGIME_UNSUPPORTED:
      return seb::RegimeName(seb::Regime::kUnsupported);
  }
  return "Unknown";
}

seb_status seb_build_certificate(const seb_instance* instance,
                                 const seb_solution* solution,
                                 seb_certificate_info* out) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(solution != nullptr, "solution");
    Require(out != nullptr, "out");
    const seb::Certificate c =
        seb::BuildCertificate(instance->file.instance, solution->solution);
    out->alpha = c.alpha;
    out->offdiag_norm = c.offdiag.norm();
    out->beta = c.beta;
    out->psd_ok = c.psd_ok ? 1 : 0;
    out->residual = c.residual;
    return SEB_OK;
  });
}

seb_status seb_check_interior(const seb_instance* instance,
                              const seb_solution* solution, int* nonempty,
                              double* slater_point) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(solution != nullptr, "solution");
    Require(nonempty != nullptr, "nonempty");
    const seb::InteriorCheck check =
        seb::CheckInterior(instance->file.instance, solution->solution);
    *nonempty = check.nonempty ? 1 : 0;
    if (slater_point && check.slater_point) {
      CopyOut(*check.slater_point, slater_point);
    }
    return SEB_OK;
  });
}

seb_status seb_identity_residual(const seb_instance* instance,
                                 const seb_solution* solution, const double* x,
                                 double* out) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(solution != nullptr, "solution");
    Require(x != nullptr, "x");
    Require(out != nullptr, "out");
    const auto n = static_cast<size_t>(instance->file.instance.dimension());
    *out = seb::IdentityResidual(instance->file.instance, solution->solution,
                                 ToVector(x, n));
    return SEB_OK;
  });
}

seb_status seb_solution_report_json(const seb_instance* instance,
                                    const seb_solution* solution,
                                    uint64_t seed, size_t verify_count,
                                    int pretty, char* buffer, size_t* size) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(solution != nullptr, "solution");
    seb::ReportOptions options;
    options.seed = seed;
    options.verify_count = verify_count;
    options.pretty = pretty != 0;
    return WriteString(seb::SolutionReportJson(instance->file.instance,
                                               solution->solution, options),
                       buffer, size);
  });
}

seb_status seb_map_create(const seb_instance* instance,
                          const double* target_center, double target_radius,
                          seb_map** out) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(target_center != nullptr, "target_center");
    Require(out != nullptr, "out");
    const auto n = static_cast<size_t>(instance->file.instance.dimension());
    const seb::Ball target(ToVector(target_center, n), target_radius);
    *out = new seb_map{
        seb::QuadraticMap::FromInstance(instance->file.instance, target)};
    return SEB_OK;
  });
}

void seb_map_destroy(seb_map* map) { delete map; }

seb_status seb_map_shifted_regime(const seb_map* map, int* rank,
                                  seb_regime* regime) {
  return Guard([&] {
    Require(map != nullptr, "map");
    const int r = map->map.ShiftedRank();
    if (rank) *rank = r;
    if (regime) {
      *regime = ToC(seb::RegimeFromRank(r, map->map.dimension(),
                                        map->map.size()));
    }
    return SEB_OK;
  });
}

seb_status seb_map_eval(const seb_map* map, const double* x, double* z) {
  return Guard([&] {
    Require(map != nullptr, "map");
    Require(x != nullptr, "x");
    Require(z != nullptr, "z");
    const auto n = static_cast<size_t>(map->map.dimension());
    CopyOut(seb::EvalMap(map->map, ToVector(x, n)), z);
    return SEB_OK;
  });
}

seb_status seb_map_sample(const seb_map* map, size_t count, uint64_t seed,
                          double* values) {
  return Guard([&] {
    Require(map != nullptr, "map");
    Require(values != nullptr || count == 0, "values");
    const auto [origin, radius] = seb::DefaultSamplingFrame(map->map);
    const size_t width = map->map.size() + 1;
    for (size_t i = 0; i < count; ++i) {
      seb::Rng rng(seb::SplitSeed(seed, i));
      const seb::Vector x =
          origin + radius * seb::GaussianVector(rng, origin.size());
      CopyOut(seb::EvalMap(map->map, x), values + i * width);
    }
    return SEB_OK;
  });
}

seb_status seb_membership_g(const seb_map* map, const double* z,
                            seb_verdict* verdict, double* witness) {
  return Guard([&] {
    Require(map != nullptr, "map");
    Require(z != nullptr, "z");
    Require(verdict != nullptr, "verdict");
    const seb::MembershipVerdict v =
        seb::MembershipG(map->map, ToVector(z, map->map.size() + 1));
    verdict->member = v.member ? 1 : 0;
    verdict->margin = v.margin;
    verdict->has_witness = v.witness ? 1 : 0;
    if (witness && v.witness) CopyOut(*v.witness, witness);
    return SEB_OK;
  });
}

seb_status seb_membership_g_bullet(const seb_map* map, const double* z,
                                   seb_verdict* verdict) {
  return Guard([&] {
    Require(map != nullptr, "map");
    Require(z != nullptr, "z");
    Require(verdict != nullptr, "verdict");
    const seb::MembershipVerdict v =
        seb::MembershipGBullet(map->map, ToVector(z, map->map.size() + 1));
    verdict->member = v.member ? 1 : 0;
    verdict->margin = v.margin;
    verdict->has_witness = v.witness ? 1 : 0;
    return SEB_OK;
  });
}

void seb_probe_options_init(seb_probe_options* options) {
  if (!options) return;
  options->samples = 10000;
  options->seed = 0;
  options->radius = 0.0;
  options->threads = 1;
  options->extra_points = nullptr;
  options->extra_count = 0;
}

seb_status seb_convexity_probe(const seb_map* map,
                               const seb_probe_options* options,
                               size_t* tested, size_t* counterexamples,
                               double* first_counterexample) {
  return Guard([&] {
    Require(map != nullptr, "map");
    const seb::ConvexityReport report =
        seb::ConvexityProbe(map->map, ProbeFrom(map, options));
    if (tested) *tested = report.tested;
    if (counterexamples) *counterexamples = report.counterexamples.size();
    if (first_counterexample && !report.counterexamples.empty()) {
      CopyOut(report.counterexamples.front().z, first_counterexample);
    }
    return SEB_OK;
  });
}

seb_status seb_separation_probe(const seb_map* map,
                                const seb_probe_options* options,
                                size_t* tested, size_t* g_hits,
                                size_t* bullet_hits) {
  return Guard([&] {
    Require(map != nullptr, "map");
    const seb::SeparationReport report =
        seb::SeparationProbe(map->map, ProbeFrom(map, options));
    if (tested) *tested = report.tested;
    if (g_hits) *g_hits = report.g_hits_lambda.size();
    if (bullet_hits) *bullet_hits = report.bullet_hits_lambda.size();
    return SEB_OK;
  });
}

seb_status seb_sample_intersection(const seb_instance* instance, size_t count,
                                   uint64_t seed, seb_sampling_method method,
                                   double* points) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(points != nullptr || count == 0, "points");
    const seb::SampleCloud cloud = seb::SampleIntersection(
        instance->file.instance, count, seed,
        method == SEB_SAMPLING_REJECTION ? seb::SamplingMethod::kRejection
                                         : seb::SamplingMethod::kHitAndRun);
    const auto n = static_cast<size_t>(instance->file.instance.dimension());
    for (size_t i = 0; i < cloud.points.size(); ++i) {
      CopyOut(cloud.points[i], points + i * n);
    }
    return SEB_OK;
  });
}

seb_status seb_cloud_meb(const double* points, size_t count, size_t dimension,
                         int iterations, double* center, double* radius) {
  return Guard([&] {
    Require(center != nullptr, "center");
    Require(radius != nullptr, "radius");
    const seb::EnclosingBall ball =
        seb::CloudMeb(CloudFrom(points, count, dimension), iterations);
    CopyOut(ball.center, center);
    *radius = ball.radius;
    return SEB_OK;
  });
}

seb_status seb_farthest_distance(const double* points, size_t count,
                                 size_t dimension, const double* center,
                                 double* out) {
  return Guard([&] {
    Require(center != nullptr, "center");
    Require(out != nullptr, "out");
    *out = seb::FarthestDistance(CloudFrom(points, count, dimension),
                                 ToVector(center, dimension));
    return SEB_OK;
  });
}

seb_status seb_grid_oracle(const seb_instance* instance, int k, double* value,
                           double* minimizer) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(value != nullptr, "value");
    const seb::GridOptimum best =
        seb::GridOracle(seb::BuildQp(instance->file.instance), k);
    *value = best.value;
    if (minimizer) CopyOut(best.minimizer, minimizer);
    return SEB_OK;
  });
}

seb_status seb_grid_min_maxg(const seb_instance* instance, int resolution,
                             const double* lo, const double* hi,
                             double* value, double* bound) {
  return Guard([&] {
    Require(instance != nullptr, "instance");
    Require(lo != nullptr, "lo");
    Require(hi != nullptr, "hi");
    Require(value != nullptr, "value");
    const auto n = static_cast<size_t>(instance->file.instance.dimension());
    const seb::GridMinimum grid = seb::GridMinMaxG(
        instance->file.instance, resolution, ToVector(lo, n), ToVector(hi, n));
    *value = grid.value;
    if (bound) *bound = grid.resolution_bound;
    return SEB_OK;
  });
}

}  // extern "C"
