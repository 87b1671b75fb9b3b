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

#include "gflbdp/analytics.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.h"
#include "gflbdp/errors.h"
#include "gflbdp/quadrature.h"

namespace gflbdp {

namespace detail {

ProcessParams asymptotic_params(const ProcessParams& p) {
  p.validate();
  const double nu = p.rho - p.alpha * p.gamma;
  if (!(nu > 0.0 && nu < 1.0) && p.gamma != 0.0) {
    std::ostringstream os;
    os << "asymptotic forms need 0 < rho - alpha*gamma < 1 (got " << nu << ")";
    throw DomainError(os.str());
  }
  ProcessParams q = p;
  const double scale = std::pow(p.beta, -p.gamma);
  q.lambda *= scale;
  q.mu *= scale;
  q.gamma = 0.0;
  q.rho = nu;
  return q;
}

}  // namespace detail

namespace {

double critical_rate(const ProcessParams& p) { return 0.5 * (p.lambda + p.mu); }

// Inverts a w-domain closed form on the Talbot contour, past a real pole at
// eta(w) = pole_level when that level is positive.
double contour(const ProcessParams& p, double t, const ComplexTransform& F,
               double pole_level, const EvalConfig& cfg) {
  InversionConfig inv = cfg.fallback;
  if (pole_level > 0.0) {
    inv.shift = std::max(inv.shift,
                         rightmost_symbol_root(LaplaceSymbol::from(p), pole_level));
  }
  return invert_laplace(F, t, inv);
}

}  // namespace

double classical_extinction(double lambda, double mu, double t) {
  detail::check_time(t);
  if (!(lambda > 0.0) || !(mu >= 0.0)) throw DomainError("need lambda > 0, mu >= 0");
  if (t == 0.0) return 0.0;
  if (std::fabs(lambda - mu) < 1e-8 * (lambda + mu)) {
    const double lt = 0.5 * (lambda + mu) * t;
    return lt / (1.0 + lt);
  }
  // Written so the exponential never grows: x = exp(-|lambda-mu| t).
  const double a = lambda - mu;
  const double x = std::exp(-std::fabs(a) * t);
  const double om = -std::expm1(-std::fabs(a) * t);  // 1 - x
  if (a > 0.0) return mu * om / (lambda - mu * x);
  return mu * om / (mu - lambda * x);
}

double classical_state_prob(int n, double lambda, double mu, double t) {
  if (n < 1) throw DomainError("state index must be >= 1");
  detail::check_time(t);
  if (!(lambda > 0.0) || !(mu >= 0.0)) throw DomainError("need lambda > 0, mu >= 0");
  if (t == 0.0) return n == 1 ? 1.0 : 0.0;
  if (std::fabs(lambda - mu) < 1e-8 * (lambda + mu)) {
    const double lt = 0.5 * (lambda + mu) * t;
    return std::exp((n - 1) * std::log(lt) - (n + 1) * std::log1p(lt));
  }
  const double a = lambda - mu;
  const double x = std::exp(-std::fabs(a) * t);
  const double om = -std::expm1(-std::fabs(a) * t);
  if (a > 0.0) {
    // (l-m)^2 x (l(1-x))^{n-1} / (l - m x)^{n+1}
    return a * a * x * std::pow(lambda * om, n - 1) /
           std::pow(lambda - mu * x, n + 1);
  }
  // Same expression with numerator and denominator divided by e^{-(l-m) t n}.
  return a * a * x * std::pow(lambda * om, n - 1) / std::pow(mu - lambda * x, n + 1);
}

double mean_gflbdp(const ProcessParams& p, double t, const EvalConfig& cfg) {
  p.validate();
  detail::check_time(t);
  if (t == 0.0) return 1.0;
  TimeChangeMoments m(p, t, cfg);
  return m.laplace_q(p.mu - p.lambda);
}

double second_factorial_moment(const ProcessParams& p, double t,
                               const EvalConfig& cfg) {
  p.validate();
  detail::check_time(t);
  if (t == 0.0) return 0.0;
  TimeChangeMoments m(p, t, cfg);
  const double a = p.lambda - p.mu;
  if (a == 0.0) return 2.0 * p.lambda * m.h(1);
  const double la = std::log(std::fabs(a));
  auto term = [&](int j) {
    // (2^{j+1} - 1) a^j h_{j+1}, with the power formed in logs.
    double w = std::exp(j * la) * (std::exp2(j + 1.0) - 1.0);
    double s = (a < 0.0 && j % 2) ? -1.0 : 1.0;
    return std::make_pair(s * w * m.h(j + 1), w * m.error(j + 1));
  };
  detail::SeriesResult r;
  bool ok = false;
  try {
    r = detail::sum_series(term, cfg.tol, cfg.max_terms);
    ok = r.converged;
  } catch (const DivergenceError&) {
    ok = false;
  }
  if (ok) return 2.0 * p.lambda * r.value;
  if (!cfg.laplace_fallback) {
    std::ostringstream os;
    os << "second factorial moment series did not converge after " << r.terms
       << " terms (largest term " << r.largest << ")";
    throw DivergenceError(os.str(), r.largest, r.terms);
  }
  const LaplaceSymbol sym = LaplaceSymbol::from(p);
  ComplexTransform F = [&](std::complex<double> w) {
    std::complex<double> eta = laplace_symbol(sym, w);
    return 2.0 * p.lambda * (eta / w) / ((eta - a) * (eta - 2.0 * a));
  };
  return contour(p, t, F, 2.0 * a, cfg);
}

double variance_gflbdp(const ProcessParams& p, double t, const EvalConfig& cfg) {
  const double m2 = second_factorial_moment(p, t, cfg);
  const double e = mean_gflbdp(p, t, cfg);
  const double var = m2 + e - e * e;
  const double scale = std::max({1.0, std::fabs(m2), e * e});
  if (var < -1e-8 * scale) {
    std::ostringstream os;
    os << "variance evaluated to " << var << " (m2=" << m2 << ", mean=" << e
       << "); series evaluations are inconsistent";
    throw InternalError(os.str());
  }
  return std::max(0.0, var);
}

double survival_interarrival(const ProcessParams& p, double c, double t,
                             const EvalConfig& cfg, SeriesDiagnostics* diag) {
  p.validate();
  detail::check_time(t);
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("rate c must be > 0");
  if (t == 0.0) return 1.0;
  TimeChangeMoments m(p, t, cfg);
  return detail::checked_probability(m.laplace_q(c, 0, diag), "survival");
}

double extinction_prob(const ProcessParams& p, double t, const EvalConfig& cfg) {
  p.validate();
  detail::check_time(t);
  if (t == 0.0) return 0.0;
  TimeChangeMoments m(p, t, cfg);
  const double stop = 0.1 * cfg.tol;

  if (p.regime() == RateRegime::kEqual) {
    // 1 - int_0^inf e^{-y} S(lambda y) dy; the k!-series itself diverges.
    const double lam = critical_rate(p);
    auto f = [&](double y) {
      if (y > 745.0) return 0.0;
      return std::exp(-y) * m.laplace_q(lam * y);
    };
    QuadratureResult q = integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                   {cfg.tol, 0.1 * cfg.tol, 15});
    return detail::checked_probability(1.0 - q.value, "extinction probability");
  }

  const bool below = p.regime() == RateRegime::kBirthBelowDeath;
  if (!below && p.mu == 0.0) return 0.0;
  const double q = below ? p.lambda / p.mu : p.mu / p.lambda;
  const double coef = below ? p.mu / p.lambda - 1.0 : 1.0 - p.mu / p.lambda;
  detail::IntegerRateSurvival S(m, std::fabs(p.lambda - p.mu));
  double sum = 0.0, qk = 1.0;
  int k = 1;
  for (; k <= cfg.max_terms; ++k) {
    qk *= q;
    const double s = S(k);
    sum += qk * s;
    // S is decreasing in the rate, so S(k d) bounds every later survival.
    if (coef * qk * q / (1.0 - q) * s < stop) break;
  }
  if (k > cfg.max_terms) {
    std::ostringstream os;
    os << "geometric extinction series with ratio " << q
       << " needs more than " << cfg.max_terms << " terms";
    throw DivergenceError(os.str(), sum, k);
  }
  const double v = below ? 1.0 - coef * sum : q - coef * sum;
  return detail::checked_probability(v, "extinction probability");
}

double asymptotic_extinction(const ProcessParams& p, double t, const EvalConfig& cfg) {
  return extinction_prob(detail::asymptotic_params(p), t, cfg);
}

namespace laplace_route {

double expectation(const ProcessParams& p, double t,
                   const std::function<double(double)>& g,
                   const InversionConfig& inv) {
  p.validate();
  const LaplaceSymbol sym = LaplaceSymbol::from(p);
  RealTransform F = [&](double w) {
    const double eta = laplace_symbol(sym, w);
    auto f = [&](double y) { return y > 745.0 ? 0.0 : g(y / eta) * std::exp(-y); };
    QuadratureResult q = integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                   {1e-13, 1e-16, 15});
    return q.value / w;
  };
  return invert_laplace(F, t, inv);
}

double mean(const ProcessParams& p, double t, const InversionConfig& inv) {
  p.validate();
  const LaplaceSymbol sym = LaplaceSymbol::from(p);
  const double a = p.lambda - p.mu;
  InversionConfig cfg = inv;
  if (a > 0.0) {
    // Shifting exactly onto the pole leaves e^{-shift t} f(t) tending to a
    // constant, which Gaver-Stehfest resolves far better than a decaying tail.
    cfg.shift = std::max(cfg.shift, rightmost_symbol_root(sym, a));
  }
  RealTransform F = [&](double w) {
    const double eta = laplace_symbol(sym, w);
    return (eta / w) / (eta - a);
  };
  return invert_laplace(F, t, cfg);
}

double survival(const ProcessParams& p, double c, double t,
                const InversionConfig& inv) {
  p.validate();
  if (!(c > 0.0)) throw DomainError("rate c must be > 0");
  const LaplaceSymbol sym = LaplaceSymbol::from(p);
  RealTransform F = [&](double w) {
    const double eta = laplace_symbol(sym, w);
    return (eta / w) / (eta + c);
  };
  return invert_laplace(F, t, inv);
}

double extinction(const ProcessParams& p, double t, const InversionConfig& inv) {
  return expectation(p, t, [&](double s) {
    return classical_extinction(p.lambda, p.mu, s);
  }, inv);
}

double state_prob(const ProcessParams& p, int n, double t, const InversionConfig& inv) {
  return expectation(p, t, [&](double s) {
    return classical_state_prob(n, p.lambda, p.mu, s);
  }, inv);
}

}  // namespace laplace_route

}  // namespace gflbdp
