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

#ifndef GFLBDP_ANALYTICS_H_
#define GFLBDP_ANALYTICS_H_

#include <complex>
#include <functional>

#include "gflbdp/laplace.h"
#include "gflbdp/process_params.h"
#include "gflbdp/time_change.h"

namespace gflbdp {

// Classical linear birth-death process started from one individual.
double classical_extinction(double lambda, double mu, double t);
double classical_state_prob(int n, double lambda, double mu, double t);

// E N(t) = sum_k (lambda - mu)^k h_k(t).
double mean_gflbdp(const ProcessParams& p, double t, const EvalConfig& cfg = {});

// E N(t)(N(t) - 1) = 2 lambda sum_j (2^{j+1} - 1) (lambda - mu)^j h_{j+1}(t).
double second_factorial_moment(const ProcessParams& p, double t,
                               const EvalConfig& cfg = {});

// m_2 + E N - (E N)^2. Throws InternalError when the result is below -1e-8.
double variance_gflbdp(const ProcessParams& p, double t, const EvalConfig& cfg = {});

// Pr{T > t} for an exponential clock of rate c run on Q(t), i.e.
// E exp(-c Q(t)) = sum_k (-c)^k h_k(t).
double survival_interarrival(const ProcessParams& p, double c, double t,
                             const EvalConfig& cfg = {},
                             SeriesDiagnostics* diag = nullptr);

double extinction_prob(const ProcessParams& p, double t, const EvalConfig& cfg = {});

// Pr{N(t) = n}, n >= 1.
double state_prob(const ProcessParams& p, int n, double t, const EvalConfig& cfg = {});

// Large-t forms: the clock behaves like an inverse (rho - alpha gamma)-stable
// subordinator with rates scaled by beta^{-gamma}. Requires rho > alpha gamma.
double asymptotic_extinction(const ProcessParams& p, double t,
                             const EvalConfig& cfg = {});
double asymptotic_state_prob(const ProcessParams& p, int n, double t,
                             const EvalConfig& cfg = {});

// Mean of the Prabhakar integral of the process with primed parameters.
double mean_prabhakar_integral(const ProcessParams& p,
                               const PrabhakarIntegralParams& ip, double t,
                               const EvalConfig& cfg = {});

// Roots of lambda s^2 + (i v - lambda - mu) s + mu = 0, r1 with the larger
// real part. They coincide only at lambda = mu, v = 0, where the classical CF
// has a removable singularity and is still evaluated.
struct ComplexRoots {
  std::complex<double> r1;
  std::complex<double> r2;
  double v = 0.0;
};
ComplexRoots cf_roots(double lambda, double mu, double v);

// E exp(i u N(t) + i v Y(t)) with Y the path integral.
std::complex<double> joint_cf_classical(double u, double v, double lambda,
                                        double mu, double t);

// Time-changed version. K = 0 truncates the outer series adaptively.
std::complex<double> joint_cf_gflbdp(double u, double v, const ProcessParams& p,
                                     double t, int K = 0,
                                     const EvalConfig& cfg = {});

// Bounded two-type model run on an inverse rho-stable clock.
double genetic_mean(const GeneticParams& gp, double t);
double genetic_avg_type_h(const GeneticParams& gp, double t);
double genetic_avg_type_h_asymptotic(const GeneticParams& gp, double t);
double genetic_time_changed_path_integral_mean(const GeneticParams& gp, double t);

// Independent evaluations through numerical inversion of w-domain forms, used
// to cross-check the series above. The default inversion is Gaver-Stehfest.
namespace laplace_route {

// E g(Q(t)) from its transform (1/w) int_0^inf g(y / eta(w)) e^{-y} dy.
double expectation(const ProcessParams& p, double t,
                   const std::function<double(double)>& g,
                   const InversionConfig& inv = {});

// Inverts (eta/w) / (eta - (lambda - mu)). When lambda > mu the abscissa is
// shifted past the real pole automatically.
double mean(const ProcessParams& p, double t, const InversionConfig& inv = {});
double survival(const ProcessParams& p, double c, double t,
                const InversionConfig& inv = {});
double extinction(const ProcessParams& p, double t, const InversionConfig& inv = {});
double state_prob(const ProcessParams& p, int n, double t,
                  const InversionConfig& inv = {});

}  // namespace laplace_route

}  // namespace gflbdp

#endif  // GFLBDP_ANALYTICS_H_
