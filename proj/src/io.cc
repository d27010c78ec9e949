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

#include "seb/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "seb/random.hpp"
#include "seb/sampler.hpp"

namespace seb {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

void RejectUnknownKeys(const Json& object,
                       std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; })) {
      Fail("unknown field \"" + key + "\" in " + where);
    }
  }
}

double ReadNumber(const Json& v, const std::string& where) {
  if (!v.is_number()) Fail(where + " must be a number");
  return v.get<double>();
}

Ball ReadBall(const Json& j, const std::string& where) {
  if (!j.is_object()) Fail(where + " must be an object");
  RejectUnknownKeys(j, {"center", "radius"}, where);
  if (!j.contains("center")) Fail(where + " lacks \"center\"");
  if (!j.contains("radius")) Fail(where + " lacks \"radius\"");
  const Json& c = j.at("center");
  if (!c.is_array()) Fail(where + ".center must be an array");
  Vector center(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    center(static_cast<Eigen::Index>(i)) =
        ReadNumber(c[i], where + ".center[" + std::to_string(i) + "]");
  }
  return Ball(std::move(center), ReadNumber(j.at("radius"), where + ".radius"));
}

Json VectorJson(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json BallJson(const Ball& b) {
  Json out = Json::object();
  out["center"] = VectorJson(b.center());
  out["radius"] = b.radius();
  return out;
}

// JSON has no representation for non-finite doubles.
Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

InstanceFile ParseInstanceJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail("instance must be a JSON object");
  RejectUnknownKeys(doc, {"dimension", "balls", "target"}, "instance");
  if (!doc.contains("dimension")) Fail("instance lacks \"dimension\"");
  if (!doc.contains("balls")) Fail("instance lacks \"balls\"");
  const Json& dim = doc.at("dimension");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    Fail("dimension must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(dim.get<std::int64_t>());
  const Json& balls = doc.at("balls");
  if (!balls.is_array() || balls.empty()) {
    Fail("balls must be a nonempty array");
  }
  std::vector<Ball> parsed;
  parsed.reserve(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const std::string where = "balls[" + std::to_string(i) + "]";
    Ball b = ReadBall(balls[i], where);
    if (b.dimension() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  where + " has dimension " + std::to_string(b.dimension()) +
                      ", expected " + std::to_string(n));
    }
    parsed.push_back(std::move(b));
  }
  std::optional<Ball> target;
  if (doc.contains("target")) {
    target = ReadBall(doc.at("target"), "target");
    if (target->dimension() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "target dimension");
    }
  }
  return InstanceFile{Instance(std::move(parsed)), std::move(target)};
}

InstanceFile ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string DumpInstanceJson(const InstanceFile& file, bool pretty) {
  Json doc = Json::object();
  doc["dimension"] = file.instance.dimension();
  Json balls = Json::array();
  for (const Ball& b : file.instance.balls()) balls.push_back(BallJson(b));
  doc["balls"] = std::move(balls);
  if (file.target) doc["target"] = BallJson(*file.target);
  return pretty ? doc.dump(2) : doc.dump();
}

double MaxIdentityResidual(const Instance& instance, const Solution& solution,
                           int points, std::uint64_t seed) {
  double spread = 1.0;
  for (const Ball& b : instance.balls()) {
    spread = std::max(spread, (b.center() - solution.center).norm() +
                                  b.radius());
  }
  Rng rng(SplitSeed(seed, 0x1de));
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    const Vector x =
        solution.center + spread * GaussianVector(rng, instance.dimension());
    const double r = IdentityResidual(instance, solution, x);
    worst = std::max(worst, std::abs(r) / (1.0 + x.squaredNorm()));
  }
  return worst;
}

std::string SolutionReportJson(const Instance& instance,
                               const Solution& solution,
                               const ReportOptions& options) {
  Json doc = Json::object();
  doc["status"] = SolutionStatusName(solution.status);
  doc["center"] = VectorJson(solution.center);
  doc["radius"] = solution.radius;
  doc["multipliers"] = VectorJson(solution.multipliers);
  doc["qp_value"] = solution.qp_value;

  Json regime = Json::object();
  regime["rank_centers"] = solution.regime.rank_centers;
  if (solution.regime.rank_shifted) {
    regime["rank_shifted"] = *solution.regime.rank_shifted;
  } else {
    regime["rank_shifted"] = nullptr;
  }
  regime["regime"] = RegimeName(solution.regime.regime);
  doc["regime"] = std::move(regime);

  const bool encloses = solution.status == SolutionStatus::kCertifiedOptimal ||
                        solution.status == SolutionStatus::kUpperBoundOnly;
  if (encloses) {
    const Certificate cert = BuildCertificate(instance, solution);
    Json c = Json::object();
    c["alpha"] = cert.alpha;
    c["offdiag_norm"] = cert.offdiag.norm();
    c["beta"] = cert.beta;
    c["psd_ok"] = cert.psd_ok;
    c["residual"] = cert.residual;
    doc["certificate"] = std::move(c);
  } else {
    doc["certificate"] = nullptr;
  }

  Json diag = Json::object();
  diag["fw_gap"] = solution.fw_gap;
  diag["iterations"] = solution.iterations;
  diag["converged"] = solution.converged;
  diag["identity_residual_max"] = MaxIdentityResidual(
      instance, solution, options.identity_points, options.seed);
  doc["diagnostics"] = std::move(diag);

  const InteriorCheck interior = CheckInterior(instance, solution);
  Json in = Json::object();
  in["nonempty"] = interior.nonempty;
  in["max_constraint"] = Number(interior.max_constraint);
  doc["interior"] = std::move(in);

  doc["seed"] = options.seed;
  if (options.verify_count > 0) {
    Json verify = Json::object();
    verify["count"] = options.verify_count;
    if (interior.nonempty) {
      SamplerOptions sampler;
      sampler.slater_point = interior.slater_point;
      const SampleCloud cloud =
          SampleIntersection(instance, options.verify_count, options.seed,
                             SamplingMethod::kHitAndRun, sampler);
      verify["method"] = SamplingMethodName(cloud.method);
      verify["max_violation"] =
          FarthestDistance(cloud, solution.center) - solution.radius;
    } else {
      verify["skipped"] = "intersection has empty interior";
    }
    doc["verify"] = std::move(verify);
  }

  if (solution.status == SolutionStatus::kEmptyInterior ||
      solution.status == SolutionStatus::kDegeneratePoint) {
    doc["notes"] = Json::array(
        {"outcome decided by min_x max_i g_i(x) = -q*, outside the "
         "nonempty-interior setting of the enclosing-ball formula"});
  }
  return options.pretty ? doc.dump(2) : doc.dump();
}

std::string ErrorJson(const std::string& code, const std::string& message) {
  Json doc = Json::object();
  Json err = Json::object();
  err["code"] = code;
  err["message"] = message;
  doc["error"] = std::move(err);
  return doc.dump();
}

}  // namespace seb
