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

#include "gflbdp/time_change.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "gflbdp/errors.h"
#include "gflbdp/special_functions.h"

namespace gflbdp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SumState {
  double sum = 0.0;
  double abs_sum = 0.0;
  double err = 0.0;
  double largest = 0.0;
  int small_run = 0;
  double prev_abs = std::numeric_limits<double>::infinity();
};

}  // namespace

TimeChangeMoments::TimeChangeMoments(const ProcessParams& params, double t,
                                     EvalConfig cfg)
    : params_(params), t_(t), cfg_(cfg) {
  params_.validate();
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and > 0");
  }
  h_.push_back(1.0);
  err_.push_back(0.0);
}

TermValue scaled_ml(double alpha, double b, double g, double beta, double t,
                    const EvalConfig& cfg) {
  TermValue out;
  const double log_t = std::log(t);
  if (g == 0.0) {
    // E^0 collapses to 1/Gamma: a single closed-form term.
    out.value = std::exp((b - 1.0) * log_t - log_gamma(b));
    out.error = 4.0 * kEps * out.value;
    return out;
  }
  try {
    SeriesOptions opts;
    opts.tol = 1e-15;
    opts.max_terms = cfg.max_terms;
    MLEvaluation ev =
        mittag_leffler_general(alpha, b, g, -beta * std::pow(t, alpha), opts);
    const double scale = std::exp((b - 1.0) * log_t);
    out.value = ev.value * scale;
    out.error = ev.error_estimate * scale;
    if (std::isfinite(out.value) && out.error <= 1e-8 * std::fabs(out.value)) {
      return out;
    }
  } catch (const DivergenceError&) {
  }
  if (!cfg.laplace_fallback) {
    std::ostringstream os;
    os << "Mittag-Leffler term t^" << (b - 1.0) << " E^" << g << "_{" << alpha
       << "," << b << "}(-" << beta << " t^" << alpha << ") at t=" << t
       << " could not be evaluated by its series";
    throw DivergenceError(os.str(), 0.0, 0);
  }
  ComplexTransform F = [&](std::complex<double> w) {
    return std::exp(-b * std::log(w) - g * std::log(1.0 + beta * std::pow(w, -alpha)));
  };
  out.value = invert_laplace(F, t, cfg.fallback);
  InversionConfig finer = cfg.fallback;
  finer.order += 4;
  out.error = std::fabs(invert_laplace(F, t, finer) - out.value) +
              4.0 * kEps * std::fabs(out.value);
  return out;
}

void TimeChangeMoments::ensure(int k) {
  while (static_cast<int>(h_.size()) <= k) {
    const int kk = static_cast<int>(h_.size());
    TermValue v = scaled_ml(params_.alpha, kk * params_.rho + 1.0,
                            kk * params_.gamma, params_.beta, t_, cfg_);
    h_.push_back(v.value);
    err_.push_back(v.error);
  }
}

double TimeChangeMoments::h(int k) {
  if (k < 0) throw DomainError("moment index must be >= 0");
  ensure(k);
  return h_[k];
}

double TimeChangeMoments::error(int k) {
  if (k < 0) throw DomainError("moment index must be >= 0");
  ensure(k);
  return err_[k];
}

double TimeChangeMoments::laplace_q_series(double c, int j,
                                           SeriesDiagnostics& diag, bool& ok) {
  ok = false;
  SumState st;
  const double log_c = c != 0.0 ? std::log(std::fabs(c)) : 0.0;
  const double stop = 0.01 * cfg_.tol;
  int k = j;
  for (; k <= j + cfg_.max_terms; ++k) {
    const int p = k - j;
    if (c == 0.0 && p > 0) break;
    double hk, ek;
    try {
      hk = h(k);
      ek = error(k);
    } catch (const Error&) {
      return st.sum;
    }
    double log_coef = log_gamma(k + 1.0) - log_gamma(p + 1.0) + p * log_c;
    double coef = std::exp(log_coef);
    int sign = (k % 2 ? -1 : 1) * ((c < 0.0 && p % 2) ? -1 : 1);
    double term = sign * coef * hk;
    if (!std::isfinite(term)) return st.sum;
    st.sum += term;
    st.abs_sum += std::fabs(term);
    st.err += coef * ek;
    st.largest = std::max(st.largest, std::fabs(term));
    if (st.abs_sum * kEps > cfg_.tol * std::max(1.0, std::fabs(st.sum))) {
      // Cancellation already exceeds what the target allows.
      diag.terms = k - j + 1;
      diag.largest_term = st.largest;
      return st.sum;
    }
    const double a = std::fabs(term);
    if (a <= stop * std::fabs(st.sum) || a < 1e-300) {
      st.small_run = a <= st.prev_abs ? st.small_run + 1 : 0;
      if (st.small_run >= 3) break;
    } else {
      st.small_run = 0;
    }
    st.prev_abs = a;
  }
  diag.terms = k - j + 1;
  diag.largest_term = st.largest;
  if (k > j + cfg_.max_terms) return st.sum;
  double err = st.err + 4.0 * kEps * st.abs_sum + st.prev_abs;
  diag.error_estimate = err;
  ok = std::isfinite(st.sum) && err <= cfg_.tol * std::max(1.0, std::fabs(st.sum));
  return st.sum;
}

std::complex<double> laplace_q_transform(const LaplaceSymbol& sym, double c,
                                         int j, std::complex<double> w) {
  std::complex<double> eta = laplace_symbol(sym, w);
  double fact = 1.0;
  for (int i = 2; i <= j; ++i) fact *= i;
  double sign = j % 2 ? -1.0 : 1.0;
  return sign * fact * (eta / w) / std::pow(eta + c, j + 1);
}

double rightmost_symbol_root(const LaplaceSymbol& sym, double a) {
  if (!(a > 0.0)) return 0.0;
  auto g = [&](double w) { return laplace_symbol(sym, w) - a; };
  double hi = 1.0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e300) throw NumericError("symbol root search did not bracket");
  }
  double lo = hi;
  while (g(lo) > 0.0) {
    hi = lo;
    lo /= 1.25;
    if (lo < 1e-14) return 0.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

double TimeChangeMoments::laplace_q_contour(double c, int j, double* error) {
  const LaplaceSymbol sym = LaplaceSymbol::from(params_);
  InversionConfig inv = cfg_.fallback;
  if (c < 0.0) inv.shift = std::max(inv.shift, rightmost_symbol_root(sym, -c));
  ComplexTransform F = [&](std::complex<double> w) {
    return laplace_q_transform(sym, c, j, w);
  };
  const double v = invert_laplace(F, t_, inv);
  // A flat error guess would be amplified by the finite differences in the
  // state-probability series, so the estimate is measured against a finer
  // contour instead.
  InversionConfig finer = inv;
  finer.order += 8;
  *error = std::fabs(invert_laplace(F, t_, finer) - v) + 4.0 * kEps * std::fabs(v);
  return v;
}

double TimeChangeMoments::laplace_q(double c, int j, SeriesDiagnostics* diag) {
  if (j < 0) throw DomainError("derivative order must be >= 0");
  if (!std::isfinite(c)) throw DomainError("rate must be finite");
  SeriesDiagnostics local;
  SeriesDiagnostics& d = diag ? *diag : local;
  d = {};
  if (params_.is_classical()) {
    // Q(t) = t, so E[(-Q)^j e^{-cQ}] is explicit.
    d.terms = 1;
    return std::pow(-t_, j) * std::exp(-c * t_);
  }
  bool ok = false;
  double v = laplace_q_series(c, j, d, ok);
  if (ok) return v;
  if (!cfg_.laplace_fallback) {
    std::ostringstream os;
    os << "series for E[(-Q)^" << j << " exp(-c Q)] at c=" << c << ", t=" << t_
       << " lost accuracy after " << d.terms << " terms (largest term "
       << d.largest_term << ")";
    throw DivergenceError(os.str(), d.largest_term, d.terms);
  }
  d.laplace_fallback = true;
  v = laplace_q_contour(c, j, &d.error_estimate);
  return v;
}

std::complex<double> TimeChangeMoments::laplace_q(std::complex<double> c,
                                                  SeriesDiagnostics* diag) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("rate must be finite");
  }
  SeriesDiagnostics local;
  SeriesDiagnostics& d = diag ? *diag : local;
  d = {};
  if (params_.is_classical()) {
    d.terms = 1;
    return std::exp(-c * t_);
  }
  std::complex<double> sum = 0.0, pw = 1.0;
  double abs_sum = 0.0, err = 0.0, prev = std::numeric_limits<double>::infinity();
  int small_run = 0;
  int k = 0;
  for (; k <= cfg_.max_terms; ++k) {
    const double hk = h(k);
    std::complex<double> term = pw * hk;
    sum += term;
    const double a = std::abs(term);
    abs_sum += a;
    err += std::abs(pw) * error(k);
    d.largest_term = std::max(d.largest_term, a);
    if (a <= 0.01 * cfg_.tol * std::abs(sum) || a < 1e-300) {
      small_run = a <= prev ? small_run + 1 : 0;
      if (small_run >= 3) break;
    } else {
      small_run = 0;
    }
    prev = a;
    pw *= -c;
    if (!std::isfinite(pw.real()) || !std::isfinite(pw.imag())) break;
  }
  d.terms = k + 1;
  d.error_estimate = err + 4.0 * kEps * abs_sum + prev;
  if (k <= cfg_.max_terms &&
      d.error_estimate <= cfg_.tol * std::max(1.0, std::abs(sum))) {
    return sum;
  }
  if (!cfg_.laplace_fallback) {
    std::ostringstream os;
    os << "series for E[exp(-c Q(t))] at complex c=(" << c.real() << ","
       << c.imag() << "), t=" << t_ << " did not reach tolerance after "
       << d.terms << " terms (largest term " << d.largest_term << ")";
    throw DivergenceError(os.str(), d.largest_term, d.terms);
  }
  // The original is complex valued, so the full contour is needed. Poles of
  // (eta/w)/(eta + c) sit near the negative axis for Re c > 0, inside it.
  const LaplaceSymbol sym = LaplaceSymbol::from(params_);
  ComplexTransform F = [&](std::complex<double> w) {
    std::complex<double> eta = laplace_symbol(sym, w);
    return (eta / w) / (eta + c);
  };
  InversionConfig inv = cfg_.fallback;
  std::complex<double> v = invert_laplace_complex(F, t_, inv);
  inv.order += 4;
  d.laplace_fallback = true;
  d.error_estimate = std::abs(invert_laplace_complex(F, t_, inv) - v);
  return v;
}

}  // namespace gflbdp
