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
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/special_functions.h"
#include "oracles/oracle_values.h"

namespace gflbdp {
namespace {

ProcessParams make(double lambda, double mu, double alpha, double beta, double gamma,
                   double rho) {
  ProcessParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.rho = rho;
  return p;
}

const ProcessParams kP9 = make(1.0, 0.5, 0.5, 1.0, 0.9, 0.8);
const ProcessParams kP9Sub = make(0.5, 1.0, 0.5, 1.0, 0.9, 0.8);
const ProcessParams kP9Crit = make(1.0, 1.0, 0.5, 1.0, 0.9, 0.8);
const ProcessParams kP4 = make(1.0, 0.5, 0.5, 1.0, 0.4, 0.3);
const ProcessParams kPB = make(2.0, 1.0, 0.7, 0.5, 0.9, 0.6);

TEST(Classical, ExtinctionAndStates) {
  EXPECT_NEAR(classical_extinction(1, 1, 1), 0.5, 1e-15);
  EXPECT_NEAR(classical_state_prob(1, 1, 1, 1), 0.25, 1e-15);
  // The birth rate must be positive.
  EXPECT_THROW(classical_extinction(0.0, 2.0, 0.7), DomainError);
  // Pure birth (Yule): geometric with p = e^{-lambda t}.
  const double q = std::exp(-0.9);
  EXPECT_NEAR(classical_state_prob(3, 0.9, 0.0, 1.0), q * (1 - q) * (1 - q), 1e-15);
  double total = classical_extinction(2, 1, 1.3);
  for (int n = 1; n < 400; ++n) total += classical_state_prob(n, 2, 1, 1.3);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Mean, MatchesOracle) {
  EXPECT_NEAR(mean_gflbdp(kP9, 1.0), oracle::kMean_P9_t1, 1e-10);
  EXPECT_NEAR(mean_gflbdp(kP4, 1.0), oracle::kMean_P4_t1, 1e-10);
  EXPECT_NEAR(mean_gflbdp(kPB, 1.0), oracle::kMean_PB_t1, 1e-9);
}

TEST(Mean, ReducesToExponential) {
  const ProcessParams p = make(2.0, 1.0, 0.5, 0.5, 0.0, 1.0);
  EXPECT_NEAR(mean_gflbdp(p, 1.5), std::exp(1.5), 1e-10);
  EXPECT_EQ(mean_gflbdp(p, 0.0), 1.0);
}

TEST(Mean, InverseStableClockGivesMittagLeffler) {
  const ProcessParams p = make(2.0, 1.0, 0.5, 0.5, 0.0, 0.6);
  EXPECT_NEAR(mean_gflbdp(p, 2.0), mittag_leffler(0.6, 1.0, std::pow(2.0, 0.6)), 1e-10);
}

TEST(Mean, SeriesAgreesWithTransformRoute) {
  for (const auto& p : {kP9, kP9Sub, kP4, kPB}) {
    for (double t : {0.5, 2.0}) {
      const double s = mean_gflbdp(p, t);
      EXPECT_NEAR(laplace_route::mean(p, t), s, 1e-6 * s) << p.lambda << " " << t;
    }
  }
}

TEST(Variance, MatchesOracle) {
  EXPECT_NEAR(variance_gflbdp(kP9, 1.0), oracle::kVariance_P9_t1, 1e-9);
}

TEST(Variance, ClassicalClosedForm) {
  // Var N(t) = (lambda + mu)/(lambda - mu) e^{at}(e^{at} - 1), a = lambda - mu.
  const ProcessParams p = make(1.5, 0.5, 0.5, 1.0, 0.0, 1.0);
  const double e = std::exp(1.2);
  EXPECT_NEAR(variance_gflbdp(p, 1.2), 2.0 * e * (e - 1.0), 1e-9);
}

TEST(Survival, MatchesOracleAndRoute) {
  EXPECT_NEAR(survival_interarrival(kP9, 1.5, 1.0), oracle::kSurvival_P9_c15_t1, 1e-10);
  EXPECT_NEAR(laplace_route::survival(kP9, 1.5, 1.0), oracle::kSurvival_P9_c15_t1, 1e-7);
  EXPECT_EQ(survival_interarrival(kP9, 1.5, 0.0), 1.0);
  EXPECT_THROW(survival_interarrival(kP9, 0.0, 1.0), DomainError);
}

TEST(Extinction, MatchesOracle) {
  EXPECT_NEAR(extinction_prob(kP9, 1.0), oracle::kExt_P9_t1, 1e-10);
  EXPECT_NEAR(extinction_prob(kP9Sub, 1.0), oracle::kExt_P9sub_t1, 1e-10);
  EXPECT_NEAR(extinction_prob(kP9Crit, 1.0), oracle::kExt_P9crit_t1, 1e-10);
  EXPECT_NEAR(extinction_prob(kP4, 1.0), oracle::kExt_P4_t1, 1e-10);
}

TEST(Extinction, SwappedRatesAreRelated) {
  // Swapping lambda and mu scales the classical Pr{N=0} by lambda / mu at
  // every time, so the same holds after the time change.
  EXPECT_NEAR(extinction_prob(kP9Sub, 1.0), 2.0 * extinction_prob(kP9, 1.0), 1e-10);
}

TEST(StateProb, MatchesOracle) {
  EXPECT_NEAR(state_prob(kP9, 1, 1.0), oracle::kP1_P9_t1, 1e-10);
  EXPECT_NEAR(state_prob(kP9, 3, 1.0), oracle::kP3_P9_t1, 1e-10);
  EXPECT_NEAR(state_prob(kP9Sub, 2, 1.0), oracle::kP2_P9sub_t1, 1e-10);
  EXPECT_NEAR(state_prob(kP9Crit, 1, 1.0), oracle::kP1_P9crit_t1, 1e-10);
  EXPECT_NEAR(state_prob(kP4, 2, 1.0), oracle::kP2_P4_t1, 1e-10);
  // Larger n goes through an (n-1)-th finite difference, which amplifies the
  // contour error by about 2^(n-1).
  EXPECT_NEAR(state_prob(kP9, 6, 1.0), oracle::kP6_P9_t1, 1e-12);
  EXPECT_NEAR(state_prob(kP9, 10, 1.0), oracle::kP10_P9_t1, 1e-9);
}

TEST(StateProb, SumsToOne) {
  double total = extinction_prob(kP9, 1.0);
  for (int n = 1; n <= 80; ++n) total += state_prob(kP9, n, 1.0);
  EXPECT_NEAR(total, 1.0, 1e-8);
}

TEST(StateProb, RejectsBadArguments) {
  EXPECT_THROW(state_prob(kP9, 0, 1.0), DomainError);
  EXPECT_THROW(extinction_prob(kP9, -1.0), DomainError);
  ProcessParams bad = kP9;
  bad.rho = 0.9;
  bad.gamma = 0.4;
  EXPECT_THROW(mean_gflbdp(bad, 1.0), DomainError);
}

TEST(Asymptotics, ApproachExactValues) {
  const ProcessParams p = make(1.0, 0.5, 0.5, 1.0, 0.9, 0.8);
  const double t = 1e3;
  const double exact = extinction_prob(p, t);
  EXPECT_NEAR(asymptotic_extinction(p, t), exact, 0.02 * exact);
  ProcessParams bad = p;
  bad.gamma = 0.9;
  bad.alpha = 0.95;
  EXPECT_THROW(asymptotic_extinction(bad, t), DomainError);
}

TEST(Prabhakar, MeanMatchesOracle) {
  EXPECT_NEAR(mean_prabhakar_integral(kP9, {0.5, 0.7, 0.5, 1.2}, 1.0),
              oracle::kPrabMean_P9_t1, 1e-9);
  EXPECT_NEAR(mean_prabhakar_integral(kP4, {0.6, 1.0, 0.3, 0.5}, 1.0),
              oracle::kPrabMean_P4_t1, 1e-9);
}

TEST(Prabhakar, PlainIntegralOfExponentialMean) {
  // Kernel (1, 1, 1, 0) is the ordinary integral: int_0^t e^{s} ds.
  const ProcessParams p = make(2.0, 1.0, 0.5, 0.5, 0.0, 1.0);
  EXPECT_NEAR(mean_prabhakar_integral(p, {1.0, 1.0, 1.0, 0.0}, 1.0),
              std::numbers::e - 1.0, 1e-10);
}

TEST(JointCf, ClassicalMatchesOracle) {
  const auto c = joint_cf_classical(0.5, 0.3, 1.0, 0.5, 1.0);
  EXPECT_NEAR(c.real(), oracle::kCfClassicalRe, 1e-12);
  EXPECT_NEAR(c.imag(), oracle::kCfClassicalIm, 1e-12);
  // At u = v = 0 the CF is 1 and at t = 0 it is e^{iu}.
  EXPECT_NEAR(std::abs(joint_cf_classical(0, 0, 1.0, 0.5, 2.0) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(joint_cf_classical(0.7, 0.3, 1.0, 0.5, 0.0) - std::polar(1.0, 0.7)),
              0.0, 1e-13);
}

TEST(JointCf, ClassicalCriticalRemovableSingularity) {
  const auto at = joint_cf_classical(0.4, 0.0, 1.0, 1.0, 1.0);
  const auto near = joint_cf_classical(0.4, 1e-7, 1.0, 1.0, 1.0);
  EXPECT_NEAR(std::abs(at - near), 0.0, 1e-6);
}

TEST(JointCf, TimeChangedMatchesOracle) {
  const auto c = joint_cf_gflbdp(0.5, 0.3, kP9, 1.0);
  EXPECT_NEAR(c.real(), oracle::kCfP9Re, 1e-8);
  EXPECT_NEAR(c.imag(), oracle::kCfP9Im, 1e-8);
}

TEST(JointCf, TimeChangedReducesToClassical) {
  const ProcessParams p = make(1.0, 0.5, 0.5, 1.0, 0.0, 1.0);
  const auto a = joint_cf_gflbdp(0.5, 0.3, p, 1.2);
  const auto b = joint_cf_classical(0.5, 0.3, 1.0, 0.5, 1.2);
  EXPECT_NEAR(std::abs(a - b), 0.0, 1e-6);
}

GeneticParams genetic() {
  GeneticParams g;
  g.M = 10;
  g.n0 = 2;
  g.lambda = 1.0;
  g.mu = 3.0;
  g.rho = 0.7;
  return g;
}

TEST(Genetic, MatchesOracles) {
  EXPECT_NEAR(genetic_mean(genetic(), 1.5), oracle::kGeneticMean, 1e-11);
  EXPECT_NEAR(genetic_avg_type_h(genetic(), 1.5), oracle::kGeneticAvg, 1e-9);
  EXPECT_NEAR(genetic_time_changed_path_integral_mean(genetic(), 1.5),
              oracle::kGeneticPathMean, 1e-10);
}

TEST(Genetic, EquilibriumStartIsConstant) {
  GeneticParams g;
  g.M = 10;
  g.n0 = 5;
  g.lambda = 1.0;
  g.mu = 1.0;
  g.rho = 0.6;
  for (double t : {0.0, 0.5, 3.0}) EXPECT_NEAR(genetic_mean(g, t), 5.0, 1e-12);
}

TEST(Genetic, AsymptoticAverageConverges) {
  const double t = 1e4;
  const double exact = genetic_avg_type_h(genetic(), t);
  EXPECT_NEAR(genetic_avg_type_h_asymptotic(genetic(), t), exact, 1e-3 * exact);
  EXPECT_NEAR(genetic_mean(genetic(), 1e6), genetic().stationary_mean(), 1e-2);
}

TEST(Genetic, Validation) {
  GeneticParams g = genetic();
  g.n0 = 11;
  EXPECT_THROW(genetic_mean(g, 1.0), DomainError);
  g = genetic();
  g.rho = 1.2;
  EXPECT_THROW(genetic_mean(g, 1.0), DomainError);
}

}  // namespace
}  // namespace gflbdp
