// Copyright 2026 The gflbdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gflbdp_cli/app.h"
#include "gflbdp_cli/verify.h"

namespace gflbdp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gflbdp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

TEST(Cli, MittagLefflerOfOneIsE) {
  const auto r = invoke({"ml", "--alpha", "1", "--beta-ml", "1", "--x", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "value,terms,last_term,error_estimate,method");
  EXPECT_NEAR(std::stod(l[1]), 2.718281828459045, 1e-11);
}

TEST(Cli, GammaZeroGivesReciprocalGamma) {
  const auto r = invoke({"ml", "--alpha", "0.5", "--beta-ml", "1", "--gamma-ml", "0", "--x", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::stod(lines(r.out)[1]), 1.0);
}

TEST(Cli, ExtinctionRow) {
  const auto r = invoke({"analytics", "extinction", "--lambda", "1", "--mu", "1", "--gamma", "0",
                         "--rho", "1", "-t", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[1].substr(0, 2), "1,");
  EXPECT_NEAR(std::stod(l[1].substr(2)), 0.5, 1e-12);
}

TEST(Cli, TimeGridProducesRows) {
  const auto r = invoke({"analytics", "mean", "--t-grid", "0:2:5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 6u);
}

TEST(Cli, JsonOutput) {
  const auto r = invoke({"analytics", "cf", "--u", "0.5", "--v", "0.3", "-t", "1,2",
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0].contains("re"));
  EXPECT_TRUE(j[0].contains("im"));
  EXPECT_EQ(j[1]["t"].get<double>(), 2.0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"analytics", "mean", "--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analytics", "mean", "--alpha", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analytics", "mean", "--gamma", "0.4", "--rho", "0.9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, UnsupportedSimulationRegime) {
  const auto r = invoke({"simulate", "estimate", "--alpha", "0.9", "--gamma", "0.9", "--rho", "0.7",
                         "--n-paths", "100"});
  EXPECT_EQ(r.code, kExitUnsupported);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, NumericFailure) {
  EXPECT_EQ(invoke({"ml", "--alpha", "1", "--beta-ml", "2", "--x", "800"}).code, kExitNumeric);
}

TEST(Cli, PathsAreDeterministic) {
  const std::vector<std::string> args = {"simulate", "paths", "-n", "2", "--t", "1",
                                         "--seed", "5"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out)[0], "path_id,jump_time,state");
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> args = {"simulate", "estimate", "--kind", "extinction",
                                         "--n-paths", "200", "--threads", "1"};
  ::setenv(kSeedEnv, "123", 1);
  const auto env = invoke(args);
  ::unsetenv(kSeedEnv);
  auto flag_args = args;
  flag_args.insert(flag_args.end(), {"--seed", "123"});
  const auto flag = invoke(flag_args);
  ASSERT_EQ(env.code, kExitOk) << env.err;
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(lines(env.out)[1].find(",123"), std::string::npos);
  ::setenv(kSeedEnv, "not-a-number", 1);
  EXPECT_EQ(invoke(args).code, kExitUsage);
  ::unsetenv(kSeedEnv);
}

TEST(Cli, VerifyReductions) {
  const auto r = invoke({"verify", "reductions"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("OK:"), std::string::npos);
}

TEST(Cli, VerifyUnknownSuite) {
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, kExitUsage);
}

TEST(Verify, SuiteNames) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 5u);
  for (const auto& n : names) EXPECT_FALSE(n.empty());
}

}  // namespace
}  // namespace gflbdp::cli
