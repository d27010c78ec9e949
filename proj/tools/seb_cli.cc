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

// Command-line front end over the C API in seb/seb.h.
//
//   seb solve  <file> [--tol T] [--max-iter N] [--seed S] [--verify N]
//   seb jnr    <file> sample|member|probe [--count N] [--seed S]
//                     [--point z0,...,zm] [--out path]
//   seb oracle <file> [--grid k] [--cloud N] [--seed S]
//   seb rank   <file>
//
// Exit codes: 0 success, 1 parse or validation error, 2 empty interior,
// 3 unsupported regime, 4 solver did not converge.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seb/seb.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmptyInterior = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNonConvergence = 4;

struct InstanceDeleter {
  void operator()(seb_instance* p) const { seb_instance_destroy(p); }
};
struct SolutionDeleter {
  void operator()(seb_solution* p) const { seb_solution_destroy(p); }
};
struct MapDeleter {
  void operator()(seb_map* p) const { seb_map_destroy(p); }
};
using InstancePtr = std::unique_ptr<seb_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<seb_solution, SolutionDeleter>;
using MapPtr = std::unique_ptr<seb_map, MapDeleter>;

// Carries a failed C API status up to main.
class CliError {
 public:
  CliError(seb_status status, std::string message)
      : status_(status), message_(std::move(message)) {}
  seb_status status() const { return status_; }
  const std::string& message() const { return message_; }

 private:
  seb_status status_;
  std::string message_;
};

void Check(seb_status status) {
  if (status != SEB_OK) throw CliError(status, seb_last_error_message());
}

int ExitCodeFor(seb_status status) {
  switch (status) {
    case SEB_OK:
      return kExitOk;
    case SEB_ERR_EMPTY_INTERIOR:
      return kExitEmptyInterior;
    case SEB_ERR_UNSUPPORTED_REGIME:
      return kExitUnsupported;
    case SEB_ERR_NON_CONVERGENCE:
      return kExitNonConvergence;
    default:
      return kExitError;
  }
}

Json ErrorObject(const std::string& code, const std::string& message) {
  Json error = Json::object();
  error["code"] = code;
  error["message"] = message;
  Json doc = Json::object();
  doc["error"] = std::move(error);
  return doc;
}

void Emit(const Json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

std::vector<double> ParsePoint(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (item.empty() || used != item.size()) {
      throw CliError(SEB_ERR_PARSE, "bad number in --point: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw CliError(SEB_ERR_PARSE, "empty --point");
  return values;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int ThreadsFromEnv() {
  const char* env = std::getenv("THREADS");
  if (env == nullptr) return 1;
  const int threads = std::atoi(env);
  return threads > 0 ? threads : 1;
}

InstancePtr Load(const std::string& path) {
  seb_instance* raw = nullptr;
  Check(seb_instance_read_file(path.c_str(), &raw));
  return InstancePtr(raw);
}

std::vector<double> Center(const seb_solution* solution, std::size_t n) {
  std::vector<double> center(n);
  Check(seb_solution_center(solution, center.data()));
  return center;
}

std::string ReportJson(const seb_instance* instance,
                       const seb_solution* solution, std::uint64_t seed,
                       std::size_t verify, bool pretty) {
  std::size_t size = 0;
  Check(seb_solution_report_json(instance, solution, seed, verify, pretty,
                                 nullptr, &size));
  std::string text(size, '\0');
  Check(seb_solution_report_json(instance, solution, seed, verify, pretty,
                                 text.data(), &size));
  text.resize(size - 1);
  return text;
}

// Solves with defaults; non-convergence is reported as an error.
SolutionPtr SolveDefault(const seb_instance* instance,
                         const seb_solve_options* options) {
  seb_solution* raw = nullptr;
  const seb_status status = seb_solve(instance, options, &raw);
  SolutionPtr solution(raw);
  Check(status);
  return solution;
}

struct SolveArgs {
  std::string path;
  double tol = 0.0;
  long max_iter = 0;
  std::uint64_t seed = 0;
  std::size_t verify = 0;
};

int RunSolve(const SolveArgs& args, bool pretty) {
  InstancePtr instance = Load(args.path);
  seb_solve_options options;
  seb_solve_options_init(&options);
  options.tol_gap = args.tol;
  options.max_iter = args.max_iter;
  SolutionPtr solution = SolveDefault(instance.get(), &options);

  seb_solution_info info;
  Check(seb_solution_get_info(solution.get(), &info));
  if (info.status == SEB_SOLUTION_EMPTY_INTERIOR) {
    Json doc = ErrorObject(seb_status_name(SEB_ERR_EMPTY_INTERIOR),
                           "intersection of balls has empty interior");
    doc["status"] = seb_solution_status_name(info.status);
    doc["qp_value"] = info.qp_value;
    doc["seed"] = args.seed;
    Emit(doc, pretty);
    return kExitEmptyInterior;
  }
  std::cout << ReportJson(instance.get(), solution.get(), args.seed,
                          args.verify, pretty)
            << "\n";
  return kExitOk;
}

struct JnrArgs {
  std::string path;
  std::string action;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string point;
  std::string out;
};

MapPtr BuildMap(const seb_instance* instance) {
  const std::size_t n = seb_instance_dimension(instance);
  std::vector<double> center(n);
  double radius = 0.0;
  if (seb_instance_has_target(instance)) {
    Check(seb_instance_target(instance, center.data(), &radius));
  } else {
    SolutionPtr solution = SolveDefault(instance, nullptr);
    seb_solution_info info;
    Check(seb_solution_get_info(solution.get(), &info));
    if (info.status == SEB_SOLUTION_EMPTY_INTERIOR ||
        info.status == SEB_SOLUTION_DEGENERATE_POINT) {
      throw CliError(SEB_ERR_EMPTY_INTERIOR,
                     "no target given and the smallest enclosing ball is "
                     "undefined for this instance");
    }
    center = Center(solution.get(), n);
    radius = info.radius;
  }
  seb_map* raw = nullptr;
  Check(seb_map_create(instance, center.data(), radius, &raw));
  return MapPtr(raw);
}

int RunJnrSample(const seb_instance* instance, const seb_map* map,
                 const JnrArgs& args, bool pretty) {
  const std::size_t count = args.count > 0 ? args.count : 1000;
  const std::size_t width = seb_instance_count(instance) + 1;
  std::vector<double> values(count * width);
  Check(seb_map_sample(map, count, args.seed, values.data()));

  std::ostringstream csv;
  for (std::size_t j = 0; j < width; ++j) {
    csv << (j ? "," : "") << "g" << j;
  }
  csv << "\n";
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      csv << (j ? "," : "") << FormatDouble(values[i * width + j]);
    }
    csv << "\n";
  }

  Json summary = Json::object();
  summary["rows"] = count;
  summary["columns"] = width;
  summary["seed"] = args.seed;
  if (args.out.empty()) {
    std::cout << csv.str();
    std::cerr << summary.dump() << "\n";
  } else {
    std::ofstream file(args.out);
    if (!file) {
      throw CliError(SEB_ERR_INVALID_ARGUMENT, "cannot open " + args.out);
    }
    file << csv.str();
    summary["out"] = args.out;
    Emit(summary, pretty);
  }
  return kExitOk;
}

int RunJnrMember(const seb_instance* instance, const seb_map* map,
                 const JnrArgs& args, bool pretty) {
  if (args.point.empty()) {
    throw CliError(SEB_ERR_INVALID_ARGUMENT, "member requires --point");
  }
  const std::vector<double> z = ParsePoint(args.point);
  const std::size_t n = seb_instance_dimension(instance);
  if (z.size() != seb_instance_count(instance) + 1) {
    throw CliError(SEB_ERR_DIMENSION_MISMATCH,
                   "--point needs " +
                       std::to_string(seb_instance_count(instance) + 1) +
                       " coordinates");
  }
  seb_verdict g;
  std::vector<double> witness(n);
  Check(seb_membership_g(map, z.data(), &g, witness.data()));
  seb_verdict bullet;
  Check(seb_membership_g_bullet(map, z.data(), &bullet));

  Json doc = Json::object();
  doc["point"] = z;
  Json g_json = Json::object();
  g_json["member"] = g.member != 0;
  g_json["margin"] = g.margin;
  g_json["witness"] = g.has_witness ? Json(witness) : Json(nullptr);
  doc["G"] = std::move(g_json);
  Json b_json = Json::object();
  b_json["member"] = bullet.member != 0;
  b_json["margin"] = bullet.margin;
  doc["G_bullet"] = std::move(b_json);
  Emit(doc, pretty);
  return kExitOk;
}

int RunJnrProbe(const seb_instance* instance, const seb_map* map,
                const JnrArgs& args, bool pretty) {
  int rank = 0;
  seb_regime regime = SEB_REGIME_UNSUPPORTED;
  Check(seb_map_shifted_regime(map, &rank, &regime));
  if (regime == SEB_REGIME_UNSUPPORTED) {
    throw CliError(SEB_ERR_UNSUPPORTED_REGIME,
                   "shifted centers have full rank n < m");
  }

  const std::size_t n = seb_instance_dimension(instance);
  const std::size_t m = seb_instance_count(instance);
  seb_probe_options options;
  seb_probe_options_init(&options);
  if (args.count > 0) options.samples = args.count;
  options.seed = args.seed;
  options.threads = ThreadsFromEnv();

  // Hit-and-run points of the intersection join the separation probe when
  // the interior is nonempty.
  std::vector<double> extra;
  {
    seb_solution* raw = nullptr;
    const seb_status status = seb_solve(instance, nullptr, &raw);
    SolutionPtr solution(raw);
    seb_solution_info info;
    if (status == SEB_OK &&
        seb_solution_get_info(solution.get(), &info) == SEB_OK &&
        (info.status == SEB_SOLUTION_CERTIFIED_OPTIMAL ||
         info.status == SEB_SOLUTION_UPPER_BOUND_ONLY)) {
      const std::size_t count = std::min<std::size_t>(options.samples, 2000);
      extra.resize(count * n);
      if (seb_sample_intersection(instance, count, args.seed,
                                  SEB_SAMPLING_HIT_AND_RUN,
                                  extra.data()) != SEB_OK) {
        extra.clear();
      }
    }
  }
  options.extra_points = extra.empty() ? nullptr : extra.data();
  options.extra_count = extra.size() / n;

  std::size_t tested = 0;
  std::size_t counterexamples = 0;
  std::vector<double> first(m + 1);
  Check(seb_convexity_probe(map, &options, &tested, &counterexamples,
                            first.data()));
  std::size_t sep_tested = 0;
  std::size_t g_hits = 0;
  std::size_t bullet_hits = 0;
  Check(seb_separation_probe(map, &options, &sep_tested, &g_hits,
                             &bullet_hits));

  Json doc = Json::object();
  doc["seed"] = args.seed;
  doc["threads"] = options.threads;
  Json reg = Json::object();
  reg["rank_shifted"] = rank;
  reg["regime"] = seb_regime_name(regime);
  doc["regime"] = std::move(reg);
  Json conv = Json::object();
  conv["tested"] = tested;
  conv["counterexamples"] = counterexamples;
  conv["first"] = counterexamples ? Json(first) : Json(nullptr);
  doc["convexity"] = std::move(conv);
  Json sep = Json::object();
  sep["tested"] = sep_tested;
  sep["g_hits_lambda"] = g_hits;
  sep["bullet_hits_lambda"] = bullet_hits;
  sep["implication_holds"] = !(bullet_hits == 0 && g_hits > 0);
  doc["separation"] = std::move(sep);
  Emit(doc, pretty);
  return kExitOk;
}

int RunJnr(const JnrArgs& args, bool pretty) {
  InstancePtr instance = Load(args.path);
  MapPtr map = BuildMap(instance.get());
  if (args.action == "sample") {
    return RunJnrSample(instance.get(), map.get(), args, pretty);
  }
  if (args.action == "member") {
    return RunJnrMember(instance.get(), map.get(), args, pretty);
  }
  return RunJnrProbe(instance.get(), map.get(), args, pretty);
}

struct OracleArgs {
  std::string path;
  int grid = 100;
  std::size_t cloud = 1000;
  std::uint64_t seed = 0;
};

int RunOracle(const OracleArgs& args, bool pretty) {
  InstancePtr instance = Load(args.path);
  const std::size_t n = seb_instance_dimension(instance.get());
  const std::size_t m = seb_instance_count(instance.get());
  SolutionPtr solution = SolveDefault(instance.get(), nullptr);
  seb_solution_info info;
  Check(seb_solution_get_info(solution.get(), &info));
  const std::vector<double> center = Center(solution.get(), n);
  const bool has_ball = info.status == SEB_SOLUTION_CERTIFIED_OPTIMAL ||
                        info.status == SEB_SOLUTION_UPPER_BOUND_ONLY;

  Json warnings = Json::array();
  auto warn = [&](const std::string& what) {
    warnings.push_back(what + ": " + seb_last_error_message());
  };

  Json doc = Json::object();
  doc["seed"] = args.seed;
  Json solver = Json::object();
  solver["status"] = seb_solution_status_name(info.status);
  solver["qp_value"] = info.qp_value;
  solver["radius"] = info.radius;
  solver["center"] = center;
  doc["solver"] = std::move(solver);

  if (args.grid > 0) {
    double value = 0.0;
    std::vector<double> minimizer(m);
    if (seb_grid_oracle(instance.get(), args.grid, &value,
                        minimizer.data()) == SEB_OK) {
      Json grid = Json::object();
      grid["k"] = args.grid;
      grid["value"] = value;
      grid["abs_diff"] = std::abs(value - info.qp_value);
      doc["grid"] = std::move(grid);
    } else {
      warn("grid oracle skipped");
      doc["grid"] = nullptr;
    }
  }

  if (args.cloud > 0) {
    std::vector<double> points(args.cloud * n);
    std::vector<double> cloud_center(n);
    double cloud_radius = 0.0;
    double farthest = 0.0;
    seb_status status =
        has_ball ? seb_sample_intersection(instance.get(), args.cloud,
                                           args.seed, SEB_SAMPLING_HIT_AND_RUN,
                                           points.data())
                 : SEB_ERR_EMPTY_INTERIOR;
    if (status == SEB_OK) {
      status = seb_cloud_meb(points.data(), args.cloud, n, 1000,
                             cloud_center.data(), &cloud_radius);
    }
    if (status == SEB_OK) {
      status = seb_farthest_distance(points.data(), args.cloud, n,
                                     center.data(), &farthest);
    }
    if (status == SEB_OK) {
      Json cloud = Json::object();
      cloud["count"] = args.cloud;
      cloud["method"] = "hit_and_run";
      cloud["radius"] = cloud_radius;
      cloud["center"] = cloud_center;
      cloud["farthest_from_solver_center"] = farthest;
      doc["cloud"] = std::move(cloud);
    } else {
      if (has_ball) {
        warn("cloud oracle skipped");
      } else {
        warnings.push_back("cloud oracle skipped: empty interior");
      }
      doc["cloud"] = nullptr;
    }
  }

  {
    std::vector<double> lo(n, 0.0);
    std::vector<double> hi(n, 0.0);
    // Bounding box of the union of balls.
    std::size_t size = 0;
    Check(seb_instance_to_json(instance.get(), 0, nullptr, &size));
    std::string text(size, '\0');
    Check(seb_instance_to_json(instance.get(), 0, text.data(), &size));
    text.resize(size - 1);
    const Json parsed = Json::parse(text);
    bool first = true;
    for (const Json& ball : parsed["balls"]) {
      const double r = ball["radius"].get<double>();
      for (std::size_t d = 0; d < n; ++d) {
        const double c = ball["center"][d].get<double>();
        lo[d] = first ? c - r : std::min(lo[d], c - r);
        hi[d] = first ? c + r : std::max(hi[d], c + r);
      }
      first = false;
    }
    int resolution = 10000;
    if (n == 2) resolution = 1000;
    if (n == 3) resolution = 100;
    double value = 0.0;
    double bound = 0.0;
    if (seb_grid_min_maxg(instance.get(), resolution, lo.data(), hi.data(),
                          &value, &bound) == SEB_OK) {
      Json grid = Json::object();
      grid["resolution"] = resolution;
      grid["lo"] = lo;
      grid["hi"] = hi;
      grid["value"] = value;
      grid["resolution_bound"] = bound;
      grid["solver_value"] = -info.qp_value;
      grid["abs_diff"] = std::abs(value + info.qp_value);
      doc["grid_min_maxg"] = std::move(grid);
    } else {
      warn("grid_min_maxg skipped");
      doc["grid_min_maxg"] = nullptr;
    }
  }
  doc["warnings"] = std::move(warnings);
  Emit(doc, pretty);
  return kExitOk;
}

int RunRank(const std::string& path, bool pretty) {
  InstancePtr instance = Load(path);
  int rank = 0;
  seb_regime regime = SEB_REGIME_UNSUPPORTED;
  Check(seb_classify(instance.get(), &rank, &regime));
  Json doc = Json::object();
  doc["dimension"] = seb_instance_dimension(instance.get());
  doc["count"] = seb_instance_count(instance.get());
  doc["rank_centers"] = rank;
  doc["regime"] = seb_regime_name(regime);
  Emit(doc, pretty);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smallest enclosing ball of an intersection of balls"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve for the enclosing ball");
  solve->add_option("file", solve_args.path, "Instance file")->required();
  solve->add_option("--tol", solve_args.tol, "Frank-Wolfe gap tolerance");
  solve->add_option("--max-iter", solve_args.max_iter, "Iteration cap");
  solve->add_option("--seed", solve_args.seed, "Random seed");
  solve->add_option("--verify", solve_args.verify,
                    "Sample N points of the intersection and check them");
  solve->add_flag("--pretty", pretty, "Indent JSON output");

  JnrArgs jnr_args;
  CLI::App* jnr = app.add_subcommand("jnr", "Joint numerical range tools");
  jnr->add_option("file", jnr_args.path, "Instance file")->required();
  jnr->add_option("action", jnr_args.action, "sample | member | probe")
      ->required()
      ->check(CLI::IsMember({"sample", "member", "probe"}));
  jnr->add_option("--count", jnr_args.count, "Samples");
  jnr->add_option("--seed", jnr_args.seed, "Random seed");
  jnr->add_option("--point", jnr_args.point, "z0,z1,...,zm");
  jnr->add_option("--out", jnr_args.out, "CSV output path");
  jnr->add_flag("--pretty", pretty, "Indent JSON output");

  OracleArgs oracle_args;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Compare the solver with brute force");
  oracle->add_option("file", oracle_args.path, "Instance file")->required();
  oracle->add_option("--grid", oracle_args.grid, "Simplex grid resolution");
  oracle->add_option("--cloud", oracle_args.cloud, "Cloud sample size");
  oracle->add_option("--seed", oracle_args.seed, "Random seed");
  oracle->add_flag("--pretty", pretty, "Indent JSON output");

  std::string rank_path;
  CLI::App* rank = app.add_subcommand("rank", "Rank and regime of centers");
  rank->add_option("file", rank_path, "Instance file")->required();
  rank->add_flag("--pretty", pretty, "Indent JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return RunSolve(solve_args, pretty);
    if (jnr->parsed()) return RunJnr(jnr_args, pretty);
    if (oracle->parsed()) return RunOracle(oracle_args, pretty);
    return RunRank(rank_path, pretty);
  } catch (const CliError& e) {
    Emit(ErrorObject(seb_status_name(e.status()), e.message()), pretty);
    return ExitCodeFor(e.status());
  } catch (const std::exception& e) {
    Emit(ErrorObject("internal_error", e.what()), pretty);
    return kExitError;
  }
}
