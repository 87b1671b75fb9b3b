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

#ifndef GFLBDP_TIME_CHANGE_H_
#define GFLBDP_TIME_CHANGE_H_

#include <complex>
#include <vector>

#include "gflbdp/laplace.h"
#include "gflbdp/process_params.h"

namespace gflbdp {

// Accuracy controls shared by every series in the analytics module.
struct EvalConfig {
  double tol = 1e-10;
  int max_terms = 10000;
  // When a series loses too much to cancellation, invert its w-domain form
  // on the Talbot contour instead of failing.
  bool laplace_fallback = true;
  InversionConfig fallback = InversionConfig::talbot(24);
};

struct SeriesDiagnostics {
  int terms = 0;
  double largest_term = 0.0;
  double error_estimate = 0.0;
  bool laplace_fallback = false;
};

struct TermValue {
  double value = 0.0;
  double error = 0.0;
};

// t^{b-1} E^g_{alpha,b}(-beta t^alpha) for g >= 0, b > 0, whose transform is
// w^{-b} (1 + beta w^{-alpha})^{-g}. Series first; when cancellation makes the
// series unreliable the transform is inverted on the Talbot contour, with the
// error estimated from a second contour.
TermValue scaled_ml(double alpha, double b, double g, double beta, double t,
                    const EvalConfig& cfg = {});

// Moments of the random clock Q(t):
//   h_k(t) = t^{k rho} E^{k gamma}_{alpha, k rho + 1}(-beta t^alpha) = E[Q(t)^k] / k!.
// Every analytic quantity of the time-changed process is a series in h_k, so
// they are computed once per (params, t) and cached.
class TimeChangeMoments {
 public:
  TimeChangeMoments(const ProcessParams& params, double t, EvalConfig cfg = {});

  double t() const { return t_; }
  const ProcessParams& params() const { return params_; }
  const EvalConfig& config() const { return cfg_; }

  // h_k and its absolute error estimate. Throws DivergenceError when neither
  // the series nor the contour inversion can produce the value.
  double h(int k);
  double error(int k);

  // d^j/dc^j E[exp(-c Q(t))] = E[(-Q)^j exp(-c Q(t))] for real c of any
  // sign. Series first, Talbot inversion of the w-domain form as fallback.
  double laplace_q(double c, int derivative = 0, SeriesDiagnostics* diag = nullptr);

  // Complex rate version. Series first; the fallback inverts on the full
  // Talbot contour because the original is complex valued.
  std::complex<double> laplace_q(std::complex<double> c,
                                 SeriesDiagnostics* diag = nullptr);

 private:
  void ensure(int k);
  double laplace_q_series(double c, int derivative, SeriesDiagnostics& diag,
                          bool& ok);
  double laplace_q_contour(double c, int derivative, double* error);

  ProcessParams params_;
  double t_;
  EvalConfig cfg_;
  std::vector<double> h_;
  std::vector<double> err_;
};

// w-domain transform of d^j/dc^j E[exp(-c Q(t))]:
//   (-1)^j j! (eta/w) / (eta + c)^{j+1}.
std::complex<double> laplace_q_transform(const LaplaceSymbol& sym, double c,
                                         int derivative,
                                         std::complex<double> w);

// Largest real w with eta(w) = a (a > 0), or 0 when there is none. Used to
// place inversion abscissas to the right of the rightmost pole.
double rightmost_symbol_root(const LaplaceSymbol& sym, double a);

}  // namespace gflbdp

#endif  // GFLBDP_TIME_CHANGE_H_
