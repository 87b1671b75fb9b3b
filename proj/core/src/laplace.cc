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

#include "gflbdp/laplace.h"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "gflbdp/errors.h"
#include "gflbdp/process_params.h"

namespace gflbdp {

LaplaceSymbol LaplaceSymbol::from(const ProcessParams& p) {
  return {p.alpha, p.beta, p.gamma, p.rho};
}

double laplace_symbol(const LaplaceSymbol& sym, double w) {
  if (!(w > 0.0)) throw DomainError("laplace_symbol: w must be > 0");
  double base = std::pow(w, sym.rho);
  if (sym.gamma == 0.0) return base;
  return base * std::pow(1.0 + sym.beta * std::pow(w, -sym.alpha), sym.gamma);
}

std::complex<double> laplace_symbol(const LaplaceSymbol& sym,
                                    std::complex<double> w) {
  std::complex<double> base = std::pow(w, sym.rho);
  if (sym.gamma == 0.0) return base;
  std::complex<double> inner = 1.0 + sym.beta * std::pow(w, -sym.alpha);
  return base * std::exp(sym.gamma * std::log(inner));
}

double symbol_ratio(const LaplaceSymbol& sym, double w, double a) {
  return std::fabs(a / laplace_symbol(sym, w));
}

ForwardLaplaceResult forward_laplace(const std::function<double(double)>& f,
                                     double w, const ForwardLaplaceConfig& cfg) {
  if (!(w > 0.0)) throw DomainError("forward_laplace: w must be > 0");
  ForwardLaplaceResult out;
  out.horizon = cfg.horizon > 0.0 ? cfg.horizon : std::log(1e12) / w;
  auto integrand = [&](double t) { return std::exp(-w * t) * f(t); };
  QuadratureResult q = integrate(integrand, 0.0, out.horizon, cfg.quad);
  out.value = q.value;
  out.quadrature_error = q.error;
  double sup = 0.0;
  const double lo = std::max(0.0, out.horizon - 1.0);
  for (int i = 0; i <= 10; ++i) {
    sup = std::max(sup, std::fabs(f(lo + (out.horizon - lo) * i / 10.0)));
  }
  out.truncation_bound = std::exp(-w * out.horizon) * sup;
  return out;
}

void validate(const InversionConfig& cfg) {
  if (cfg.method == InversionMethod::kGaverStehfest) {
    if (!cfg.adaptive_order && (cfg.order < 8 || cfg.order > 20 || cfg.order % 2 != 0)) {
      throw DomainError("Gaver-Stehfest order must be even and within [8, 20]");
    }
  } else if (cfg.order < 16) {
    throw DomainError("Talbot inversion needs at least 16 nodes");
  }
  if (!(cfg.t_min > 0.0)) throw DomainError("t_min must be > 0");
  if (!std::isfinite(cfg.shift) || cfg.shift < 0.0) {
    throw DomainError("inversion shift must be finite and >= 0");
  }
}

const std::vector<long double>& stehfest_weights(int order) {
  static std::mutex mu;
  static std::map<int, std::vector<long double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  auto fact = [](int n) {
    long double r = 1.0L;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  const int half = order / 2;
  std::vector<long double> v(order + 1, 0.0L);
  for (int k = 1; k <= order; ++k) {
    long double s = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      s += std::pow(static_cast<long double>(j), half) * fact(2 * j) /
           (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    }
    v[k] = ((k + half) % 2 ? -1.0L : 1.0L) * s;
  }
  return cache.emplace(order, std::move(v)).first->second;
}

namespace {

void check_time(double t, const InversionConfig& cfg) {
  if (!(t >= cfg.t_min) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "inversion time " << t << " below t_min " << cfg.t_min;
    throw DomainError(os.str());
  }
}

constexpr int kAdaptiveOrders[] = {14, 16, 18, 20};

// Sum of the order-N Gaver-Stehfest series over precomputed samples
// fk[k] = F(shift + k ln2 / t). Empty when the partial sums cancel so badly
// that the result carries no information.
std::optional<long double> stehfest_sum(const std::vector<double>& fk, int order,
                                        long double* abs_out) {
  const auto& v = stehfest_weights(order);
  long double sum = 0.0L;
  long double abs_sum = 0.0L;
  for (int k = 1; k <= order; ++k) {
    sum += v[k] * fk[k];
    abs_sum += std::fabs(v[k] * fk[k]);
  }
  if (abs_out) *abs_out = abs_sum;
  // Alternating weights reach ~1e7 at order 20; when the partial sums cancel
  // by more than this the result carries no information.
  if (abs_sum > 1e13L * std::fabs(sum) && abs_sum > 1e-300L) return std::nullopt;
  return sum;
}

template <class Eval>
double gaver_stehfest(Eval&& F, double t, const InversionConfig& cfg) {
  const int max_order = cfg.adaptive_order ? kAdaptiveOrders[3] : cfg.order;
  const long double a = std::numbers::ln2_v<long double> / t;
  std::vector<double> fk(max_order + 1, 0.0);
  for (int k = 1; k <= max_order; ++k) {
    fk[k] = F(cfg.shift + static_cast<double>(k * a));
    if (!std::isfinite(fk[k])) {
      std::ostringstream os;
      os << "transform is not finite at w=" << (cfg.shift + k * a)
         << "; Gaver-Stehfest cannot proceed, try the Talbot contour";
      throw InversionUnstableError(os.str());
    }
  }
  const long double scale = std::exp(static_cast<long double>(cfg.shift) * t) * a;

  if (!cfg.adaptive_order) {
    long double abs_sum = 0.0L;
    const auto sum = stehfest_sum(fk, cfg.order, &abs_sum);
    if (!sum) {
      std::ostringstream os;
      os << "Gaver-Stehfest partial sums cancel by a factor " << static_cast<double>(abs_sum)
         << " relative to the result; inversion unstable, use the Talbot contour";
      throw InversionUnstableError(os.str(), static_cast<double>(abs_sum));
    }
    return static_cast<double>(scale * *sum);
  }

  std::optional<long double> prev;
  std::optional<long double> best;
  long double best_gap = std::numeric_limits<long double>::infinity();
  for (int order : kAdaptiveOrders) {
    const auto cur = stehfest_sum(fk, order, nullptr);
    if (cur && prev && std::fabs(*cur - *prev) < best_gap) {
      best_gap = std::fabs(*cur - *prev);
      best = cur;
    }
    prev = cur;
  }
  if (!best) {
    throw InversionUnstableError(
        "Gaver-Stehfest partial sums cancel at every order; use the Talbot contour");
  }
  return static_cast<double>(scale * *best);
}

double talbot(const ComplexTransform& F, double t, const InversionConfig& cfg) {
  // Fixed Talbot contour w(theta) = r theta (cot theta + i).
  const int m = cfg.order;
  const double r = 2.0 * m / (5.0 * t);
  const double s = cfg.shift;
  std::complex<double> f0 = F({s + r, 0.0});
  double sum = 0.5 * std::exp((s + r) * t) * f0.real();
  for (int k = 1; k < m; ++k) {
    const double theta = k * std::numbers::pi / m;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> w(s + r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    std::complex<double> val = std::exp(w * t) * F(w) * std::complex<double>(1.0, sigma);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
      throw NumericError("Talbot inversion: transform not finite on the contour");
    }
    sum += val.real();
  }
  return r / m * sum;
}

std::complex<double> talbot_complex(const ComplexTransform& F, double t,
                                    const InversionConfig& cfg) {
  const int m = cfg.order;
  const double r = 2.0 * m / (5.0 * t);
  const double s = cfg.shift;
  std::complex<double> sum = 0.5 * std::exp((s + r) * t) * F({s + r, 0.0});
  for (int k = 1; k < m; ++k) {
    const double theta = k * std::numbers::pi / m;
    const double cot = std::cos(theta) / std::sin(theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const std::complex<double> w(s + r * theta * cot, r * theta);
    const std::complex<double> wc = std::conj(w);
    std::complex<double> upper = std::exp(w * t) * F(w) * std::complex<double>(1.0, sigma);
    std::complex<double> lower = std::exp(wc * t) * F(wc) * std::complex<double>(1.0, -sigma);
    if (!std::isfinite(std::abs(upper)) || !std::isfinite(std::abs(lower))) {
      throw NumericError("Talbot inversion: transform not finite on the contour");
    }
    sum += 0.5 * (upper + lower);
  }
  return r / m * sum;
}

}  // namespace

double invert_laplace(const RealTransform& F, double t,
                      const InversionConfig& cfg) {
  validate(cfg);
  check_time(t, cfg);
  if (cfg.method != InversionMethod::kGaverStehfest) {
    throw DomainError("Talbot inversion needs a complex-valued transform");
  }
  return gaver_stehfest(F, t, cfg);
}

double invert_laplace(const ComplexTransform& F, double t,
                      const InversionConfig& cfg) {
  validate(cfg);
  check_time(t, cfg);
  if (cfg.method == InversionMethod::kGaverStehfest) {
    return gaver_stehfest([&](double w) { return F({w, 0.0}).real(); }, t, cfg);
  }
  return talbot(F, t, cfg);
}

std::complex<double> invert_laplace_complex(const ComplexTransform& F, double t,
                                            const InversionConfig& cfg) {
  validate(cfg);
  check_time(t, cfg);
  if (cfg.method != InversionMethod::kTalbot) {
    throw DomainError("complex-valued originals need the Talbot contour");
  }
  return talbot_complex(F, t, cfg);
}

}  // namespace gflbdp
