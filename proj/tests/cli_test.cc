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

// Runs the seb binary on the files in data/ and checks exit codes and output.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string command =
      std::string(SEB_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Data(const std::string& name) {
  return std::string(SEB_DATA_DIR) + "/" + name;
}

TEST(CliSolveTest, Lens) {
  const RunResult r = RunCli("solve " + Data("lens.json") + " --seed 5 --verify 200");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["status"], "CertifiedOptimal");
  EXPECT_NEAR(doc["radius"].get<double>(), 1.0, 1e-8);
  EXPECT_NEAR(doc["center"][0].get<double>(), 0.0, 1e-8);
  EXPECT_NEAR(doc["center"][1].get<double>(), 0.0, 1e-8);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_TRUE(doc["certificate"]["psd_ok"].get<bool>());
  EXPECT_LE(doc["verify"]["max_violation"].get<double>(), 1e-9);
}

TEST(CliSolveTest, PrettyAndCompactShareStructure) {
  const RunResult compact = RunCli("solve " + Data("critical.json"));
  const RunResult pretty = RunCli("solve " + Data("critical.json") + " --pretty");
  ASSERT_EQ(compact.exit_code, 0);
  ASSERT_EQ(pretty.exit_code, 0);
  EXPECT_EQ(Json::parse(compact.out), Json::parse(pretty.out));
  EXPECT_NE(compact.out, pretty.out);
}

TEST(CliSolveTest, Malformed) {
  const RunResult r = RunCli("solve " + Data("malformed.json"));
  EXPECT_EQ(r.exit_code, 1);
  const Json doc = Json::parse(r.out);
  EXPECT_NE(doc["error"]["message"].get<std::string>().find("invalid radius"),
            std::string::npos);
  EXPECT_FALSE(doc.contains("center"));
}

TEST(CliSolveTest, MissingFile) {
  const RunResult r = RunCli("solve " + Data("does_not_exist.json"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(Json::parse(r.out).contains("error"));
}

TEST(CliSolveTest, Disjoint) {
  const RunResult r = RunCli("solve " + Data("disjoint.json"));
  EXPECT_EQ(r.exit_code, 2);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["status"], "EmptyInterior");
  EXPECT_TRUE(doc.contains("error"));
}

TEST(CliSolveTest, NonConvergence) {
  const std::string path = ::testing::TempDir() + "/seb_cli_slow.json";
  std::ofstream(path) << R"({"dimension": 2, "balls": [
      {"center": [0.3, -1.2], "radius": 2.5},
      {"center": [2.0, 0.4], "radius": 2.7},
      {"center": [-0.7, 1.1], "radius": 2.2}]})";
  const RunResult r = RunCli("solve " + path + " --max-iter 1 --tol 1e-300");
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_EQ(Json::parse(r.out)["error"]["code"], "non_convergence");
}

TEST(CliSolveTest, UsageError) {
  EXPECT_EQ(RunCli("solve").exit_code, 1);
  EXPECT_EQ(RunCli("bogus").exit_code, 1);
}

TEST(CliJnrTest, ExampleMember) {
  const RunResult r =
      RunCli("jnr " + Data("example.json") + " member --point 1,0,0");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_FALSE(doc["G"]["member"].get<bool>());
  EXPECT_TRUE(doc["G_bullet"]["member"].get<bool>());
  EXPECT_NEAR(doc["G_bullet"]["margin"].get<double>(), -0.5, 1e-9);
}

TEST(CliJnrTest, SampleCsvShape) {
  const RunResult r =
      RunCli("jnr " + Data("lens.json") + " sample --count 1000 --seed 3");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "g0,g1,g2");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 1000);
  EXPECT_EQ(RunCli("jnr " + Data("lens.json") + " sample --count 1000 --seed 3").out,
            r.out);
}

TEST(CliJnrTest, SampleToFile) {
  const std::string path = ::testing::TempDir() + "/seb_cli_sample.csv";
  const RunResult r = RunCli("jnr " + Data("lens.json") +
                          " sample --count 10 --seed 1 --out " + path);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["rows"], 10);
  std::ifstream file(path);
  std::string header;
  std::getline(file, header);
  EXPECT_EQ(header, "g0,g1,g2");
}

TEST(CliJnrTest, ProbeConvexRegime) {
  const RunResult r =
      RunCli("jnr " + Data("lens.json") + " probe --count 2000 --seed 2");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["convexity"]["counterexamples"], 0);
  EXPECT_EQ(doc["separation"]["g_hits_lambda"], 0);
  EXPECT_EQ(doc["separation"]["bullet_hits_lambda"], 0);
  EXPECT_EQ(doc["seed"], 2);
}

TEST(CliJnrTest, UnsupportedRegimeExitsThree) {
  EXPECT_EQ(RunCli("jnr " + Data("unsupported.json") + " probe").exit_code, 3);
  EXPECT_EQ(
      RunCli("jnr " + Data("unsupported.json") + " member --point 1,0,0,0")
          .exit_code,
      3);
}

TEST(CliJnrTest, BadPoint) {
  EXPECT_EQ(RunCli("jnr " + Data("example.json") + " member --point 1,x,0")
                .exit_code,
            1);
  EXPECT_EQ(
      RunCli("jnr " + Data("example.json") + " member --point 1,0").exit_code, 1);
}

TEST(CliOracleTest, Lens) {
  const RunResult r =
      RunCli("oracle " + Data("lens.json") + " --grid 200 --cloud 10000 --seed 1");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_LE(doc["grid"]["abs_diff"].get<double>(), 1e-3);
  const double cloud = doc["cloud"]["radius"].get<double>();
  EXPECT_GE(cloud, 0.9);
  EXPECT_LE(cloud, 1.0 + 1e-6);
  EXPECT_LE(doc["grid_min_maxg"]["abs_diff"].get<double>(),
            doc["grid_min_maxg"]["resolution_bound"].get<double>());
}

TEST(CliOracleTest, HighDimensionWarns) {
  const RunResult r = RunCli("oracle " + Data("n5.json"));
  ASSERT_EQ(r.exit_code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_TRUE(doc["grid_min_maxg"].is_null());
  EXPECT_FALSE(doc["warnings"].empty());
}

TEST(CliRankTest, Unsupported) {
  const RunResult r = RunCli("rank " + Data("unsupported.json"));
  ASSERT_EQ(r.exit_code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["rank_centers"], 2);
  EXPECT_EQ(doc["regime"], "Unsupported");
}

}  // namespace
