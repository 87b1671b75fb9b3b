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

#ifndef GFLBDP_PROCESS_PARAMS_H_
#define GFLBDP_PROCESS_PARAMS_H_

#include <string>

namespace gflbdp {

enum class RateRegime { kEqual, kBirthBelowDeath, kBirthAboveDeath };

std::string to_string(RateRegime r);

// Parameters (lambda, mu, alpha, beta, gamma, rho) of the generalized
// fractional linear birth-death process. Rates are per individual.
struct ProcessParams {
  double lambda = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double rho = 1.0;

  // Range checks plus, for gamma != 0, |rho ceil(gamma)/gamma - j alpha| < 1
  // for j = 0..ceil(gamma). Throws DomainError.
  void validate() const;

  // True when every outer stable index rho ceil(gamma)/gamma - j alpha lies
  // in (0, 1), so the subordinator composition can be sampled.
  bool simulable() const;

  int gamma_ceiling() const;

  // |lambda - mu| < 1e-8 (lambda + mu) is treated as the critical case.
  RateRegime regime() const;

  // Classical process: gamma = 0 and rho = 1.
  bool is_classical() const { return gamma == 0.0 && rho == 1.0; }
};

// Parameters of the Prabhakar integral kernel (alpha', rho', beta', gamma').
struct PrabhakarIntegralParams {
  double alpha_p = 1.0;
  double rho_p = 1.0;
  double beta_p = 1.0;
  double gamma_p = 0.0;

  void validate() const;
};

// Bounded two-type haploid population of size M = 2K with rates
// lambda_n = (M - n) lambda and mu_n = n mu.
struct GeneticParams {
  int M = 10;
  int n0 = 5;
  double lambda = 1.0;
  double mu = 1.0;
  double rho = 1.0;

  void validate() const;
  double stationary_mean() const { return M * lambda / (lambda + mu); }
};

}  // namespace gflbdp

#endif  // GFLBDP_PROCESS_PARAMS_H_
