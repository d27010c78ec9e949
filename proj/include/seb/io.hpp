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

#ifndef SEB_IO_HPP_
#define SEB_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "seb/solver.hpp"
#include "seb/types.hpp"

namespace seb {

// {"dimension": n, "balls": [{"center": [...], "radius": r}, ...],
//  "target": {"center": [...], "radius": r}}   ("target" optional)
struct InstanceFile {
  Instance instance;
  std::optional<Ball> target;
};

// Throws kParse for malformed documents or unknown fields and the Instance
// errors (kInvalidArgument, kDimensionMismatch) for invalid contents.
InstanceFile ParseInstanceJson(const std::string& text);
InstanceFile ReadInstanceFile(const std::string& path);

// Canonical form: keys in schema order, shortest round-trip doubles.
std::string DumpInstanceJson(const InstanceFile& file, bool pretty = false);

struct ReportOptions {
  std::uint64_t seed = 0;
  // Hit-and-run points used to measure containment; 0 disables.
  std::size_t verify_count = 0;
  // Random points at which the multiplier identity is evaluated.
  int identity_points = 100;
  bool pretty = false;
};

// Largest |sum mu_i g_i(x) - g(x)| / (1 + ||x||^2) over random x.
double MaxIdentityResidual(const Instance& instance, const Solution& solution,
                           int points, std::uint64_t seed);

// JSON report with center, radius, multipliers, qp_value, status, regime,
// certificate (null without an enclosing ball) and diagnostics.
std::string SolutionReportJson(const Instance& instance,
                               const Solution& solution,
                               const ReportOptions& options);

// {"error": {"code": ..., "message": ...}}
std::string ErrorJson(const std::string& code, const std::string& message);

}  // namespace seb

#endif  // SEB_IO_HPP_
