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
#include <limits>
#include <sstream>
#include <vector>

#include "detail.h"
#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/quadrature.h"
#include "gflbdp/special_functions.h"

namespace gflbdp {

namespace {

// lambda = mu. Differentiating the off-critical series n times in lambda and
// resumming gives
//   p_n = (-lambda)^{n-1}/n! int_0^inf e^{-y} [lambda y^n S^{(n)}(lambda y)
//                                             + n y^{n-1} S^{(n-1)}(lambda y)] dy
// with S^{(j)} the j-th rate derivative of E exp(-c Q(t)).
double state_prob_critical(TimeChangeMoments& m, double lam, int n,
                           const EvalConfig& cfg) {
  auto f = [&](double y) {
    if (y > 745.0 || y == 0.0) {
      // At y = 0 only the n = 1 bracket survives, with S(0) = 1.
      return (y == 0.0 && n == 1) ? 1.0 : 0.0;
    }
    const double c = lam * y;
    const double ly = std::log(y);
    const double a = lam * std::exp(n * ly - y) * m.laplace_q(c, n);
    const double b = n * std::exp((n - 1) * ly - y) * m.laplace_q(c, n - 1);
    return a + b;
  };
  QuadratureResult q = integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                 {cfg.tol, 0.1 * cfg.tol, 15});
  const double pref =
      std::exp((n - 1) * std::log(lam) - log_gamma(n + 1.0)) * (n % 2 ? 1.0 : -1.0);
  return pref * q.value;
}

// lambda != mu:
//   p_n = C sum_{r>=0} binom(r+n, r) q^r sum_{m=0}^{n-1} (-1)^m binom(n-1, m) S(d (r+m+1))
// with (C, q, d) depending on which rate dominates. The inner alternating sum
// is an (n-1)-th difference of the completely monotone S, so it lies in
// [0, S(d (r+1))]; that bounds the tail of the r-sum. The same difference
// amplifies the error of S by up to 2^{n-1}, which is tracked in *error.
double state_prob_offcritical(TimeChangeMoments& m, const ProcessParams& p, int n,
                              const EvalConfig& cfg, double* error) {
  const bool below = p.regime() == RateRegime::kBirthBelowDeath;
  const double d = std::fabs(p.lambda - p.mu);
  double C, q;
  if (below) {
    const double x = (p.lambda - p.mu) / p.mu;
    C = x * x * std::pow(p.lambda / p.mu, n - 1);
    q = p.lambda / p.mu;
  } else {
    const double x = 1.0 - p.mu / p.lambda;
    C = x * x;
    q = p.mu / p.lambda;
  }
  detail::IntegerRateSurvival S(m, d);
  std::vector<double> binom_n1(n);
  for (int k = 0; k < n; ++k) {
    binom_n1[k] = std::exp(log_gamma(n) - log_gamma(k + 1.0) - log_gamma(n - k));
  }
  const double stop = 0.1 * cfg.tol;
  double sum = 0.0, err = 0.0;
  // weight = binom(r+n, r) q^r, advanced by the ratio q (r+n+1)/(r+1).
  double weight = 1.0;
  int r = 0;
  for (; r <= cfg.max_terms; ++r) {
    double inner = 0.0, inner_err = 0.0;
    for (int k = 0; k < n; ++k) {
      inner += (k % 2 ? -1.0 : 1.0) * binom_n1[k] * S(r + k + 1);
      inner_err += binom_n1[k] * S.error(r + k + 1);
    }
    sum += weight * inner;
    err += weight * inner_err;
    const double ratio = q * (r + n + 1.0) / (r + 1.0);
    if (ratio < 1.0) {
      const double tail = C * weight * ratio / (1.0 - ratio) * S(r + 1);
      if (tail < stop) {
        err += tail;
        break;
      }
    }
    weight *= ratio;
    if (weight == 0.0) break;
  }
  if (r > cfg.max_terms) {
    std::ostringstream os;
    os << "state-probability series for n=" << n << " with ratio " << q
       << " needs more than " << cfg.max_terms << " terms";
    throw DivergenceError(os.str(), sum, r);
  }
  *error = C * err;
  return C * sum;
}

}  // namespace

double state_prob(const ProcessParams& p, int n, double t, const EvalConfig& cfg) {
  p.validate();
  if (n < 1) throw DomainError("state index must be >= 1");
  detail::check_time(t);
  if (t == 0.0) return n == 1 ? 1.0 : 0.0;
  TimeChangeMoments m(p, t, cfg);
  if (p.regime() == RateRegime::kEqual) {
    return detail::checked_probability(
        state_prob_critical(m, 0.5 * (p.lambda + p.mu), n, cfg), "state probability");
  }
  double err = 0.0;
  double v = state_prob_offcritical(m, p, n, cfg, &err);
  if (err > std::max(cfg.tol, 1e-6 * std::fabs(v))) {
    // The finite difference cancelled too much; the real-axis inversion of
    // (eta/w) P_n(eta) has no cancellation and keeps about 1e-7 absolute.
    if (!cfg.laplace_fallback) {
      std::ostringstream os;
      os << "state-probability series for n=" << n << " lost accuracy to "
         << "cancellation (estimated error " << err << ")";
      throw NumericError(os.str(), err);
    }
    v = laplace_route::state_prob(p, n, t);
  }
  return detail::checked_probability(v, "state probability");
}

double asymptotic_state_prob(const ProcessParams& p, int n, double t,
                             const EvalConfig& cfg) {
  return state_prob(detail::asymptotic_params(p), n, t, cfg);
}

}  // namespace gflbdp
