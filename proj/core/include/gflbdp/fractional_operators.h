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

#ifndef GFLBDP_FRACTIONAL_OPERATORS_H_
#define GFLBDP_FRACTIONAL_OPERATORS_H_

#include "gflbdp/process_params.h"
#include "gflbdp/sampled_function.h"

namespace gflbdp {

// Kernel (t-s)^{rho-1} E^gamma_{alpha,rho}(beta (t-s)^alpha). beta is signed
// here; the process integral uses a positive beta.
struct PrabhakarKernel {
  double alpha = 1.0;
  double rho = 1.0;
  double beta = 0.0;
  double gamma = 0.0;

  static PrabhakarKernel from(const PrabhakarIntegralParams& ip) {
    return {ip.alpha_p, ip.rho_p, ip.beta_p, ip.gamma_p};
  }
};

struct OperatorConfig {
  // Truncation tolerance for the kernel's Mittag-Leffler series.
  double ml_tol = 1e-13;
};

// int_0^t (t-s)^{rho-1} E^gamma_{alpha,rho}(beta (t-s)^alpha) g(s) ds.
double prabhakar_integral_apply(const SampledFunction& g, const PrabhakarKernel& k,
                                double t, const OperatorConfig& cfg = {});

// Regularized Hilfer-Prabhakar derivative of the process parameters:
//   int_0^t (t-s)^{-rho} E^{-gamma}_{alpha,1-rho}(-beta (t-s)^alpha) f'(s) ds,
// whose Laplace transform is eta(w) F(w) - f(0) eta(w)/w.
double rhp_derivative_apply(const SampledFunction& f, const ProcessParams& p,
                            double t, const OperatorConfig& cfg = {});

// Caputo derivative of order rho in (0, 1].
double caputo_derivative_apply(const SampledFunction& f, double rho, double t,
                               const OperatorConfig& cfg = {});

}  // namespace gflbdp

#endif  // GFLBDP_FRACTIONAL_OPERATORS_H_
