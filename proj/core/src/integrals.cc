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
#include <sstream>

#include "detail.h"
#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/special_functions.h"

namespace gflbdp {

double mean_prabhakar_integral(const ProcessParams& p,
                               const PrabhakarIntegralParams& ip, double t,
                               const EvalConfig& cfg) {
  p.validate();
  ip.validate();
  detail::check_time(t);
  if (t == 0.0) return 0.0;
  const double a = p.lambda - p.mu;
  // Inner sum over r for a fixed k:
  //   sum_r beta'^r (gamma')_r / r! t^{b-1} E^{k gamma}_{alpha,b}(x),
  //   b = k rho + rho' + r alpha' + 1.
  auto inner = [&](int k) {
    auto term = [&](int r) {
      if (ip.gamma_p == 0.0 && r > 0) return std::make_pair(0.0, 0.0);
      double coef = 1.0;
      for (int i = 1; i <= r; ++i) coef *= ip.beta_p * (ip.gamma_p + i - 1) / i;
      const double b = k * p.rho + ip.rho_p + r * ip.alpha_p + 1.0;
      TermValue v = scaled_ml(p.alpha, b, k * p.gamma, p.beta, t, cfg);
      return std::make_pair(coef * v.value, std::fabs(coef) * v.error);
    };
    detail::SeriesResult r = detail::sum_series(term, cfg.tol, cfg.max_terms);
    if (!r.converged) {
      std::ostringstream os;
      os << "Prabhakar-integral mean: inner series at k=" << k
         << " did not converge after " << r.terms << " terms";
      throw DivergenceError(os.str(), r.largest, r.terms);
    }
    return r;
  };
  auto outer = [&](int k) {
    detail::SeriesResult r = inner(k);
    const double ak = std::pow(a, k);
    return std::make_pair(ak * r.value, std::fabs(ak) * r.error);
  };
  detail::SeriesResult r = detail::sum_series(outer, cfg.tol, cfg.max_terms);
  if (!r.converged) {
    std::ostringstream os;
    os << "Prabhakar-integral mean: outer series did not converge after "
       << r.terms << " terms (largest term " << r.largest << ")";
    throw DivergenceError(os.str(), r.largest, r.terms);
  }
  return r.value;
}

ComplexRoots cf_roots(double lambda, double mu, double v) {
  if (!(lambda > 0.0) || !(mu >= 0.0)) throw DomainError("need lambda > 0, mu >= 0");
  const std::complex<double> b(lambda + mu, -v);
  const std::complex<double> disc = std::sqrt(b * b - 4.0 * lambda * mu);
  ComplexRoots r;
  r.v = v;
  r.r1 = (b + disc) / (2.0 * lambda);
  r.r2 = (b - disc) / (2.0 * lambda);
  if (r.r2.real() > r.r1.real()) std::swap(r.r1, r.r2);
  return r;
}

namespace {

// (e^x - 1) / x without cancellation near 0.
std::complex<double> expm1_ratio(std::complex<double> x) {
  if (std::abs(x) < 1e-3) return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
  return (std::exp(x) - 1.0) / x;
}

}  // namespace

std::complex<double> joint_cf_classical(double u, double v, double lambda,
                                        double mu, double t) {
  detail::check_time(t);
  const ComplexRoots rt = cf_roots(lambda, mu, v);
  const std::complex<double> z = std::polar(1.0, u);
  const std::complex<double> d = rt.r1 - rt.r2;
  // Re d >= 0, so the exponential never grows. Dividing through by d turns
  // the coincident-root case (lambda = mu, v = 0) into a removable point.
  const std::complex<double> x = -lambda * d * t;
  const std::complex<double> e = std::exp(x);
  return rt.r2 + (z - rt.r2) * e / (1.0 - (z - rt.r2) * lambda * t * expm1_ratio(x));
}

std::complex<double> joint_cf_gflbdp(double u, double v, const ProcessParams& p,
                                     double t, int K, const EvalConfig& cfg) {
  p.validate();
  detail::check_time(t);
  if (K < 0) throw DomainError("truncation K must be >= 0");
  if (u == 0.0 && v == 0.0) return 1.0;
  const std::complex<double> z = std::polar(1.0, u);
  if (t == 0.0) return z;
  const ComplexRoots rt = cf_roots(p.lambda, p.mu, v);
  const std::complex<double> d = rt.r1 - rt.r2;
  const std::complex<double> R = (z - rt.r2) / (z - rt.r1);
  const double rr = std::abs(R);
  if (!(rr < 1.0)) {
    std::ostringstream os;
    os << "joint CF series needs |(e^{iu}-r2)/(e^{iu}-r1)| < 1, got " << rr
       << " at u=" << u << ", v=" << v;
    throw DomainError(os.str());
  }
  TimeChangeMoments m(p, t, cfg);
  // |S| <= 1 because Re(lambda d) >= 0, which bounds the geometric tail.
  std::complex<double> sum = 0.0, Rk = R;
  const int cap = K > 0 ? K : cfg.max_terms;
  int k = 0;
  for (; k < cap; ++k) {
    sum += Rk * m.laplace_q(p.lambda * d * static_cast<double>(k + 1));
    Rk *= R;
    if (K == 0 && std::abs(d) * std::abs(Rk) / (1.0 - rr) < 0.1 * cfg.tol) break;
  }
  if (K == 0 && k == cap) {
    throw DivergenceError("joint CF outer series hit the term cap", std::abs(Rk), k);
  }
  return rt.r2 - d * sum;
}

}  // namespace gflbdp
