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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/monte_carlo.h"

namespace gflbdp {
namespace {

ProcessParams classical(double lambda, double mu) {
  ProcessParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.gamma = 0.0;
  p.rho = 1.0;
  return p;
}

ProcessParams p9() {
  ProcessParams p;
  p.lambda = 1.0;
  p.mu = 0.5;
  p.alpha = 0.5;
  p.beta = 1.0;
  p.gamma = 0.9;
  p.rho = 0.8;
  return p;
}

MCOptions options(std::int64_t n, unsigned threads = 1) {
  MCOptions o;
  o.n_paths = n;
  o.threads = threads;
  o.seed = 777;
  return o;
}

TEST(KindNames, RoundTrip) {
  for (auto k : {MCKind::kMean, MCKind::kVariance, MCKind::kExtinction, MCKind::kStatePMF,
                 MCKind::kJointCF, MCKind::kPathIntegralMean, MCKind::kLaplaceQ,
                 MCKind::kGeneticMean, MCKind::kGeneticPathIntegralMean}) {
    EXPECT_EQ(parse_mc_kind(to_string(k)), k);
  }
  EXPECT_EQ(to_string(MCKind::kStatePMF), "state-pmf");
  EXPECT_THROW(parse_mc_kind("median"), DomainError);
}

TEST(MonteCarlo, ClassicalExtinction) {
  MCQuery q;
  q.kind = MCKind::kExtinction;
  const auto e = mc_estimate(classical(1.0, 1.0), q, options(20000));
  EXPECT_NEAR(e.value, 0.5, 5 * e.std_error);
  EXPECT_EQ(e.n_paths, 20000);
  EXPECT_EQ(e.failed_paths, 0);
  EXPECT_EQ(e.seed, 777u);
}

TEST(MonteCarlo, ClassicalMean) {
  MCQuery q;
  q.kind = MCKind::kMean;
  const auto e = mc_estimate(classical(2.0, 1.0), q, options(20000));
  EXPECT_NEAR(e.value, std::numbers::e, 5 * e.std_error);
}

TEST(MonteCarlo, TimeChangedStateProbability) {
  MCQuery q;
  q.kind = MCKind::kStatePMF;
  q.n = 1;
  const auto e = mc_estimate(p9(), q, options(10000));
  EXPECT_NEAR(e.value, state_prob(p9(), 1, 1.0), 5 * e.std_error + 2e-3);
}

TEST(MonteCarlo, JointCfFillsImaginaryPart) {
  MCQuery q;
  q.kind = MCKind::kJointCF;
  q.u = 0.5;
  q.v = 0.3;
  const auto e = mc_estimate(classical(1.0, 0.5), q, options(10000));
  const auto exact = joint_cf_classical(0.5, 0.3, 1.0, 0.5, 1.0);
  EXPECT_NEAR(e.value, exact.real(), 5 * e.std_error);
  EXPECT_NEAR(e.im_value, exact.imag(), 5 * e.im_std_error);
  EXPECT_GT(e.im_std_error, 0.0);
}

TEST(MonteCarlo, VarianceHasPositiveError) {
  MCQuery q;
  q.kind = MCKind::kVariance;
  const auto e = mc_estimate(classical(1.5, 0.5), q, options(20000));
  const double ex = std::exp(1.0);
  EXPECT_NEAR(e.value, 2.0 * ex * (ex - 1.0), 5 * e.std_error);
  EXPECT_GT(e.std_error, 0.0);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  MCQuery q;
  q.kind = MCKind::kMean;
  const auto a = mc_estimate(p9(), q, options(2000, 1));
  const auto b = mc_estimate(p9(), q, options(2000, 3));
  const auto c = mc_estimate(p9(), q, options(2000, 4));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.std_error, c.std_error);
}

TEST(MonteCarlo, CountsFailedPaths) {
  MCQuery q;
  q.kind = MCKind::kMean;
  q.t = 3.0;
  MCOptions o = options(200);
  o.gillespie.max_events = 8;
  ProcessParams p = classical(3.0, 0.1);
  const auto e = mc_estimate(p, q, o);
  EXPECT_GT(e.failed_paths, 0);
  EXPECT_EQ(e.n_paths + e.failed_paths, 200);
  EXPECT_GT(e.failure_fraction(), 0.0);
  o.gillespie.max_events = 0;
  EXPECT_THROW(mc_estimate(p, q, o), HorizonError);
}

TEST(MonteCarlo, RejectsSmallSamples) {
  MCQuery q;
  EXPECT_THROW(mc_estimate(classical(1.0, 1.0), q, options(99)), DomainError);
}

TEST(MonteCarlo, GeneticMean) {
  GeneticParams gp;
  gp.M = 10;
  gp.n0 = 2;
  gp.lambda = 1.0;
  gp.mu = 3.0;
  gp.rho = 0.7;
  MCQuery q;
  q.kind = MCKind::kGeneticMean;
  q.t = 1.5;
  const auto e = mc_estimate(gp, q, options(10000));
  EXPECT_NEAR(e.value, genetic_mean(gp, 1.5), 5 * e.std_error + 0.01);
  q.kind = MCKind::kMean;
  EXPECT_THROW(mc_estimate(gp, q, options(1000)), DomainError);
}

}  // namespace
}  // namespace gflbdp
