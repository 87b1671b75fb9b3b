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

#ifndef GFLBDP_SPECIAL_FUNCTIONS_H_
#define GFLBDP_SPECIAL_FUNCTIONS_H_

namespace gflbdp {

// Arguments of the three-parameter (Prabhakar) Mittag-Leffler function
//   E^{gamma}_{alpha,beta}(x) = sum_k (gamma)_k x^k / (Gamma(k alpha + beta) k!).
struct MLArgs {
  double alpha = 1.0;
  double beta_ml = 1.0;
  double gamma_ml = 1.0;
  double x = 0.0;
  double tol = 1e-10;
};

inline constexpr int kDefaultTermCap = 10000;

// Controls for the series evaluator. `abs_tol` lets callers that only need
// absolute accuracy (the value is later multiplied by a small weight) accept
// results whose relative rounding error is large.
struct SeriesOptions {
  double tol = 1e-10;
  double abs_tol = 0.0;
  int max_terms = kDefaultTermCap;
  bool allow_asymptotic = true;
};

// Value plus the diagnostics reported by the `ml` CLI command.
struct MLEvaluation {
  double value = 0.0;
  int terms = 0;
  double last_term = 0.0;
  double largest_term = 0.0;
  double error_estimate = 0.0;
  bool asymptotic = false;
};

// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1, for a >= 0.
double pochhammer(double a, int k);

// Validates `args` and evaluates the series. Throws DivergenceError when the
// term cap is hit (or cancellation exceeds the tolerance) and the large
// negative argument expansion cannot stand in.
double mittag_leffler_3p(const MLArgs& args);
MLEvaluation mittag_leffler_3p_eval(const MLArgs& args,
                                    int max_terms = kDefaultTermCap);

// Same series without the public invariants: gamma_ml may be negative (the
// Pochhammer sign is tracked) and beta_ml may be zero (1/Gamma(0) = 0). Used
// by the Hilfer-Prabhakar derivative kernel.
MLEvaluation mittag_leffler_general(double alpha, double beta_ml,
                                    double gamma_ml, double x,
                                    const SeriesOptions& opts);

// Leading-order large-t behaviour
//   E^{gamma}_{alpha,beta}(-c t^alpha) ~ (c t^alpha)^{-gamma} / Gamma(beta - alpha gamma).
// Throws DomainError when beta_ml == alpha * gamma_ml.
double ml_asymptotic(double alpha, double beta_ml, double gamma_ml, double c,
                     double t);

// Two-parameter shorthand E_{alpha,beta}(x) = E^{1}_{alpha,beta}(x).
double mittag_leffler(double alpha, double beta, double x, double tol = 1e-12);

namespace detail {

// log|1/Gamma(z)| and its sign; sign == 0 at the poles of Gamma.
struct LogReciprocalGamma {
  long double log_abs;
  int sign;
};
LogReciprocalGamma log_reciprocal_gamma(long double z);

// Optimally truncated algebraic expansion of E^{gamma}_{alpha,beta}(-y) for
// y -> +inf, 0 < alpha < 1. Returns false when the smallest term is not below
// tol * |value|.
bool ml_negative_expansion(double alpha, double beta, double gamma, double y,
                           double tol, MLEvaluation& out);

}  // namespace detail

}  // namespace gflbdp

#endif  // GFLBDP_SPECIAL_FUNCTIONS_H_
