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

// Generated by generate_oracles.py with mpmath; do not edit by hand.

#ifndef GFLBDP_TESTS_ORACLE_VALUES_H_
#define GFLBDP_TESTS_ORACLE_VALUES_H_

namespace gflbdp::oracle {

// E^{0.8}_{0.5,1.35}(-0.6)
inline constexpr double kMl_a05_b135_g08_xm06 = 0.76898034937161098;

// E^{1.0}_{0.5,1.0}(-3.0)
inline constexpr double kMl_a05_b1_g1_xm3 = 0.17900115118138995;

// E^{2.5}_{0.7,1.2}(2.0)
inline constexpr double kMl_a07_b12_g25_x2 = 148.83881456273173;

// E^{0.3}_{0.9,0.5}(-10.0)
inline constexpr double kMl_a09_b05_g03_xm10 = 0.13081358917819340;

// E^{1.0}_{0.3,1.0}(-50.0)
inline constexpr double kMl_a03_b1_g1_xm50 = 0.015228201501814695;

// E^{1.0}_{1.0,2.0}(-20.0)
inline constexpr double kMl_a1_b2_g1_xm20 = 0.049999999896942319;

// E^{0.9}_{0.6,1.8}(-0.25)
inline constexpr double kMl_a06_b18_g09_xm025 = 0.91614747525707722;

// E^{1.5}_{0.8,1.0}(5.0)
inline constexpr double kMl_a08_b1_g15_x5 = 7798.8589194766835;

// h_1(1) for alpha=0.5 beta=1 gamma=0.9 rho=0.8
inline constexpr double kH1_P9_t1 = 0.61638084256216112;

// h_2(1) for alpha=0.5 beta=1 gamma=0.9 rho=0.8
inline constexpr double kH2_P9_t1 = 0.27188116979258825;

// h_5(1) for alpha=0.5 beta=1 gamma=0.9 rho=0.8
inline constexpr double kH5_P9_t1 = 0.0071170244024575766;

// h_1(2) for alpha=0.5 beta=1 gamma=0.4 rho=0.3
inline constexpr double kH1_P4_t2 = 0.95193750930620037;

// h_3(2) for alpha=0.5 beta=1 gamma=0.4 rho=0.3
inline constexpr double kH3_P4_t2 = 0.75424099801268233;

// E N(1), lambda=1 mu=0.5 alpha=0.5 beta=1 gamma=0.9 rho=0.8
inline constexpr double kMean_P9_t1 = 1.3900616239422020;

// E N(1), lambda=1 mu=0.5 alpha=0.5 beta=1 gamma=0.4 rho=0.3
inline constexpr double kMean_P4_t1 = 1.6829208244033114;

// E N(1), lambda=2 mu=1 alpha=0.7 beta=0.5 gamma=0.9 rho=0.6
inline constexpr double kMean_PB_t1 = 2.9583227650343593;

// Var N(1) for the gamma=0.9 point
inline constexpr double kVariance_P9_t1 = 1.9798252929940246;

// E exp(-1.5 Q(1)) for the gamma=0.9 point
inline constexpr double kSurvival_P9_c15_t1 = 0.46723198990399781;

// Pr{N(1)=0}, lambda=1 mu=0.5, gamma=0.9 point
inline constexpr double kExt_P9_t1 = 0.18962549286664570;

// Pr{N(1)=0}, lambda=0.5 mu=1, gamma=0.9 point
inline constexpr double kExt_P9sub_t1 = 0.37925098573329140;

// Pr{N(1)=0}, lambda=mu=1, gamma=0.9 point
inline constexpr double kExt_P9crit_t1 = 0.34230608854536063;

// Pr{N(1)=0}, lambda=1 mu=0.5, gamma=0.4 point
inline constexpr double kExt_P4_t1 = 0.21024475575826041;

// Pr{N(1)=1}, gamma=0.9 point
inline constexpr double kP1_P9_t1 = 0.52062279196537657;

// Pr{N(1)=3}, gamma=0.9 point
inline constexpr double kP3_P9_t1 = 0.064936309262407700;

// Pr{N(1)=6}, gamma=0.9 point
inline constexpr double kP6_P9_t1 = 0.0085926988101809268;

// Pr{N(1)=10}, gamma=0.9 point
inline constexpr double kP10_P9_t1 = 0.0010408160523691667;

// Pr{N(1)=2}, lambda=0.5 mu=1, gamma=0.9 point
inline constexpr double kP2_P9sub_t1 = 0.078681711677442344;

// Pr{N(1)=1}, lambda=mu=1, gamma=0.9 point
inline constexpr double kP1_P9crit_t1 = 0.45853519773953015;

// Pr{N(1)=2}, gamma=0.4 point
inline constexpr double kP2_P4_t1 = 0.14113076661453827;

// mean Prabhakar integral at t=1, kernel (alpha',rho',beta',gamma')=(0.5, 0.7, 0.5, 1.2)
inline constexpr double kPrabMean_P9_t1 = 2.4103000704969590;

// mean Prabhakar integral at t=1, kernel (alpha',rho',beta',gamma')=(0.6, 1.0, 0.3, 0.5)
inline constexpr double kPrabMean_P4_t1 = 1.6930311427674870;

// Re E exp(0.5 i N(1) + 0.3 i Y(1)), lambda=1 mu=0.5
inline constexpr double kCfClassicalRe = 0.37539457033120165;

// Im of the same
inline constexpr double kCfClassicalIm = 0.51558257785666016;

// Re of the time-changed CF at (u,v,t)=(0.5,0.3,1), gamma=0.9 point
inline constexpr double kCfP9Re = 0.57502437996875576;

// Im of the same
inline constexpr double kCfP9Im = 0.53724182751696304;

// genetic mean, M=10 n0=2 lambda=1 mu=3 rho=0.7 t=1.5
inline constexpr double kGeneticMean = 2.4637679688772133;

// t^-1 int_0^t of the genetic mean, same point
inline constexpr double kGeneticAvg = 2.4071799340745316;

// E int_0^Q(t) of the classical bounded mean, same point
inline constexpr double kGeneticPathMean = 3.5384290793630772;

// int_0^1.5 (1.5-s)^{-0.3} E^{1.2}_{0.5,0.7}(0.5 (1.5-s)^{0.5}) ds
inline constexpr double kPrabIntegralOfOne = 3.0494550806686256;

// regularized derivative of t^2 at t=1.3 for alpha=0.5 beta=1 gamma=0.4 rho=0.3
inline constexpr double kRhpDerivOfSquare = 2.5214267453398453;

}  // namespace gflbdp::oracle

#endif  // GFLBDP_TESTS_ORACLE_VALUES_H_
