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

#include "gflbdp/fractional_operators.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "gflbdp/errors.h"
#include "gflbdp/special_functions.h"

namespace gflbdp {

namespace {

void check_time(const SampledFunction& f, double t) {
  if (!(t > 0.0) || t > f.t_max()) {
    std::ostringstream os;
    os << "operator time " << t << " outside (0, " << f.t_max() << "]";
    throw DomainError(os.str());
  }
  if (f.grid().front() != 0.0) {
    throw DomainError("sampled function grid must start at 0");
  }
}

// int_0^t tau^p psi(tau) h(t - tau) dtau with p > -1, split at the grid knots
// so every piece sees a smooth interpolant. A fixed Gauss-Legendre rule per
// piece is enough: interpolation error dominates, and adaptive refinement
// only chases roundoff in the Kronrod error estimate. Pieces near the singular end
// tau = 0 use v = tau^{p+1}; the others are integrated in s = t - tau so the
// abscissae keep full precision near s = 0.
double convolve(const SampledFunction& f, bool use_derivative, double t, double p,
                const std::function<double(double)>& psi) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double q = p + 1.0;
  std::vector<double> knots;
  for (double s : f.grid()) {
    if (s < t) knots.push_back(s);
  }
  knots.push_back(t);

  auto h = [&](double s) {
    s = std::clamp(s, 0.0, f.t_max());
    return use_derivative ? f.derivative(s) : f(s);
  };
  auto substituted = [&](double v) {
    double tau = std::pow(v, 1.0 / q);
    return psi(tau) * h(t - tau) / q;
  };
  auto direct = [&](double s) {
    double tau = t - s;
    return std::pow(tau, p) * psi(tau) * h(s);
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double sa = knots[i], sb = knots[i + 1];
    const double tau_lo = t - sb, tau_hi = t - sa;
    if (p != 0.0 && tau_hi > 4.0 * tau_lo) {
      total += Rule::integrate(substituted, std::pow(tau_lo, q), std::pow(tau_hi, q));
    } else {
      total += Rule::integrate(direct, sa, sb);
    }
  }
  if (!std::isfinite(total)) {
    throw NumericError("fractional operator produced a non-finite value");
  }
  return total;
}

double kernel_ml(double alpha, double b, double g, double x, double tol) {
  SeriesOptions opts;
  opts.tol = tol;
  double v = mittag_leffler_general(alpha, b, g, x, opts).value;
  if (!std::isfinite(v)) throw NumericError("kernel evaluation is not finite");
  return v;
}

}  // namespace

double prabhakar_integral_apply(const SampledFunction& g, const PrabhakarKernel& k,
                                double t, const OperatorConfig& cfg) {
  if (!(k.rho > 0.0 && k.rho <= 1.0) || !(k.alpha > 0.0 && k.alpha <= 1.0)) {
    throw DomainError("Prabhakar kernel needs 0 < alpha <= 1 and 0 < rho <= 1");
  }
  check_time(g, t);
  std::function<double(double)> psi;
  if (k.gamma == 0.0 || k.beta == 0.0) {
    const double c = std::exp(-log_gamma(k.rho));
    psi = [c](double) { return c; };
  } else {
    psi = [&](double tau) {
      return kernel_ml(k.alpha, k.rho, k.gamma, k.beta * std::pow(tau, k.alpha),
                       cfg.ml_tol);
    };
  }
  return convolve(g, false, t, k.rho - 1.0, psi);
}

double rhp_derivative_apply(const SampledFunction& f, const ProcessParams& p,
                            double t, const OperatorConfig& cfg) {
  p.validate();
  check_time(f, t);
  // The ceiling constraint forces rho < 1 whenever gamma > 0, so rho = 1 is
  // the classical derivative.
  if (p.rho == 1.0) return f.derivative(t);
  std::function<double(double)> psi;
  if (p.gamma == 0.0) {
    const double c = std::exp(-log_gamma(1.0 - p.rho));
    psi = [c](double) { return c; };
  } else {
    psi = [&](double tau) {
      return kernel_ml(p.alpha, 1.0 - p.rho, -p.gamma,
                       -p.beta * std::pow(tau, p.alpha), cfg.ml_tol);
    };
  }
  return convolve(f, true, t, -p.rho, psi);
}

double caputo_derivative_apply(const SampledFunction& f, double rho, double t,
                               const OperatorConfig& cfg) {
  ProcessParams p;
  p.rho = rho;
  p.gamma = 0.0;
  return rhp_derivative_apply(f, p, t, cfg);
}

}  // namespace gflbdp
