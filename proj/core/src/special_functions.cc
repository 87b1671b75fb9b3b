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

#include "gflbdp/special_functions.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gflbdp/errors.h"

namespace gflbdp {
namespace {

constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();
// exp() of anything larger overflows long double.
constexpr long double kLogOverflow = 11000.0L;
// Beyond this value of |x|^(1/alpha) the hump of the alternating series
// exceeds 1/eps of long double, so summation is pointless.
constexpr double kHopelessHump = 45.0;

// Neumaier compensated accumulator.
struct CompensatedSum {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double v) {
    long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + comp; }
};

std::string describe(double alpha, double beta, double gamma, double x) {
  std::ostringstream os;
  os << "E^{" << gamma << "}_{" << alpha << "," << beta << "}(" << x << ")";
  return os.str();
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    std::ostringstream os;
    os << "log_gamma: argument must be positive and finite, got " << x;
    throw DomainError(os.str());
  }
  return std::lgamma(x);
}

double pochhammer(double a, int k) {
  if (!std::isfinite(a) || a < 0.0 || k < 0) {
    throw DomainError("pochhammer: requires finite a >= 0 and k >= 0");
  }
  if (k == 0) return 1.0;
  if (a == 0.0) return 0.0;
  if (k <= 64) {
    long double p = 1.0L;
    for (int j = 0; j < k; ++j) p *= static_cast<long double>(a) + j;
    return static_cast<double>(p);
  }
  return std::exp(std::lgamma(a + k) - std::lgamma(a));
}

namespace detail {

LogReciprocalGamma log_reciprocal_gamma(long double z) {
  if (z > 0.0L) return {-std::lgamma(z), 1};
  long double fl = std::floor(z);
  if (fl == z) return {0.0L, 0};
  // Reflection: 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi.
  long double s = std::sin(std::numbers::pi_v<long double> * (z - 2.0L * std::floor(z / 2.0L)));
  int sign = s > 0.0L ? 1 : -1;
  return {std::lgamma(1.0L - z) + std::log(std::fabs(s)) -
              std::log(std::numbers::pi_v<long double>),
          sign};
}

bool ml_negative_expansion(double alpha, double beta, double gamma, double y,
                           double tol, MLEvaluation& out) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(y > 0.0) || gamma == 0.0) {
    return false;
  }
  // E^g_{a,b}(-y) ~ sum_j (g)_j (-1)^j y^{-g-j} / (j! Gamma(b - a(g+j))).
  const long double logy = std::log(static_cast<long double>(y));
  CompensatedSum acc;
  long double log_poch = 0.0L;
  int poch_sign = 1;
  long double log_fact = 0.0L;
  long double prev_nonzero = std::numeric_limits<long double>::infinity();
  long double smallest = std::numeric_limits<long double>::infinity();
  int used = 0;
  for (int j = 0; j < 400; ++j) {
    if (j > 0) {
      long double a = static_cast<long double>(gamma) + j - 1;
      if (a == 0.0L) break;
      log_poch += std::log(std::fabs(a));
      if (a < 0.0L) poch_sign = -poch_sign;
      log_fact += std::log(static_cast<long double>(j));
    }
    LogReciprocalGamma rg = log_reciprocal_gamma(
        static_cast<long double>(beta) - static_cast<long double>(alpha) * (gamma + j));
    if (rg.sign == 0) {
      used = j + 1;
      continue;
    }
    long double mag = std::exp(log_poch - log_fact + rg.log_abs - (gamma + j) * logy);
    if (mag > prev_nonzero) break;  // optimal truncation point reached
    int sign = poch_sign * rg.sign * ((j % 2) ? -1 : 1);
    acc.add(sign * mag);
    prev_nonzero = mag;
    smallest = mag;
    used = j + 1;
    if (mag < kEpsLd * std::fabs(acc.value())) break;
  }
  long double value = acc.value();
  if (!(std::isfinite(static_cast<double>(value))) ||
      smallest > tol * std::fabs(value)) {
    return false;
  }
  out.value = static_cast<double>(value);
  out.terms = used;
  out.last_term = static_cast<double>(smallest);
  out.largest_term = std::fabs(out.value);
  out.error_estimate = static_cast<double>(smallest);
  out.asymptotic = true;
  return true;
}

}  // namespace detail

MLEvaluation mittag_leffler_general(double alpha, double beta_ml,
                                    double gamma_ml, double x,
                                    const SeriesOptions& opts) {
  MLEvaluation out;
  if (x == 0.0 || gamma_ml == 0.0) {
    auto rg = detail::log_reciprocal_gamma(beta_ml);
    out.value = rg.sign == 0 ? 0.0 : rg.sign * std::exp(static_cast<double>(rg.log_abs));
    out.terms = 1;
    out.last_term = out.value;
    out.largest_term = std::fabs(out.value);
    return out;
  }

  const bool negative_axis = x < 0.0;
  const double hump = std::pow(std::fabs(x), 1.0 / alpha);
  if (opts.allow_asymptotic && negative_axis && alpha < 1.0 &&
      hump > kHopelessHump &&
      detail::ml_negative_expansion(alpha, beta_ml, gamma_ml, -x, opts.tol, out)) {
    return out;
  }

  const long double logx = std::log(std::fabs(static_cast<long double>(x)));
  CompensatedSum acc;
  long double abs_sum = 0.0L;
  long double log_poch = 0.0L;
  int poch_sign = 1;
  long double log_fact = 0.0L;
  long double prev_mag = std::numeric_limits<long double>::infinity();
  long double largest = 0.0L;
  int small_run = 0;
  bool converged = false;
  bool overflow = false;
  int k = 0;
  long double mag = 0.0L;
  for (; k < opts.max_terms; ++k) {
    if (k > 0) {
      long double a = static_cast<long double>(gamma_ml) + k - 1;
      if (a == 0.0L) {  // (gamma)_k vanishes from here on
        converged = true;
        break;
      }
      log_poch += std::log(std::fabs(a));
      if (a < 0.0L) poch_sign = -poch_sign;
      log_fact += std::log(static_cast<long double>(k));
    }
    auto rg = detail::log_reciprocal_gamma(static_cast<long double>(k) * alpha + beta_ml);
    long double term = 0.0L;
    mag = 0.0L;
    if (rg.sign != 0) {
      long double lm = log_poch - log_fact + rg.log_abs + k * logx;
      if (lm > kLogOverflow) {
        overflow = true;
        break;
      }
      mag = std::exp(lm);
      int sign = poch_sign * rg.sign * ((negative_axis && (k % 2)) ? -1 : 1);
      term = sign * mag;
    }
    acc.add(term);
    abs_sum += mag;
    if (mag > largest) largest = mag;
    // Same yardstick as the reliability test below, so a converged series
    // is never rejected for stopping early.
    long double threshold = std::max<long double>(
        opts.tol * std::fabs(acc.value()), opts.abs_tol);
    if ((mag < threshold || mag < 1e-300L) && mag <= prev_mag) {
      if (++small_run >= 3) {
        ++k;
        converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
    prev_mag = mag;
  }

  long double value = acc.value();
  out.value = static_cast<double>(value);
  out.terms = k;
  out.last_term = static_cast<double>(mag);
  out.largest_term = static_cast<double>(largest);
  out.error_estimate = static_cast<double>(4.0L * kEpsLd * abs_sum + mag);

  const double allowed = std::max(opts.tol * std::fabs(out.value), opts.abs_tol);
  overflow = overflow || !std::isfinite(out.value);
  const bool reliable = converged && !overflow && out.error_estimate <= allowed;
  if (reliable) return out;

  if (opts.allow_asymptotic && negative_axis && alpha < 1.0) {
    MLEvaluation asym;
    if (detail::ml_negative_expansion(alpha, beta_ml, gamma_ml, -x, opts.tol, asym)) {
      return asym;
    }
  }
  // E_{1,b} for integer b has the closed form obtained from e^x by the
  // recursion E_{1,b+1}(x) = (E_{1,b}(x) - 1/(b-1)!) / x. It is stable
  // exactly where the series cancels, that is for large |x|.
  if (alpha == 1.0 && gamma_ml == 1.0 && beta_ml == std::floor(beta_ml) &&
      beta_ml >= 1.0 && beta_ml <= 30.0 && std::fabs(x) >= 1.0) {
    long double e = std::exp(static_cast<long double>(x));
    long double inv_fact = 1.0L;  // 1/(b-1)! for the current b
    for (int b = 1; b < static_cast<int>(beta_ml); ++b) {
      e = (e - inv_fact) / x;
      inv_fact /= b;
    }
    MLEvaluation closed;
    closed.value = static_cast<double>(e);
    closed.terms = static_cast<int>(beta_ml);
    closed.error_estimate = 4.0 * beta_ml * std::numeric_limits<double>::epsilon() *
                            std::fabs(closed.value);
    closed.largest_term = std::fabs(closed.value);
    if (std::isfinite(closed.value)) return closed;
  }
  std::ostringstream os;
  os << "series for " << describe(alpha, beta_ml, gamma_ml, x)
     << (overflow    ? " overflows double precision"
         : converged ? " lost accuracy to cancellation"
                     : " hit the term cap")
     << " after " << k << " terms (largest term " << out.largest_term
     << ", error estimate " << out.error_estimate << ")";
  throw DivergenceError(os.str(), overflow ? std::numeric_limits<double>::infinity()
                                           : out.largest_term,
                        k);
}

MLEvaluation mittag_leffler_3p_eval(const MLArgs& args, int max_terms) {
  if (!(args.alpha > 0.0) || !(args.beta_ml > 0.0) || !(args.tol > 0.0) ||
      !(args.gamma_ml >= 0.0) || !std::isfinite(args.x) ||
      !std::isfinite(args.alpha) || !std::isfinite(args.beta_ml) ||
      !std::isfinite(args.gamma_ml)) {
    throw DomainError(
        "mittag_leffler_3p: requires alpha > 0, beta_ml > 0, gamma_ml >= 0, "
        "tol > 0 and finite x");
  }
  if (max_terms < 1) throw DomainError("mittag_leffler_3p: max_terms must be positive");
  SeriesOptions opts;
  opts.tol = args.tol;
  opts.max_terms = max_terms;
  return mittag_leffler_general(args.alpha, args.beta_ml, args.gamma_ml, args.x, opts);
}

double mittag_leffler_3p(const MLArgs& args) {
  return mittag_leffler_3p_eval(args).value;
}

double ml_asymptotic(double alpha, double beta_ml, double gamma_ml, double c,
                     double t) {
  if (!(alpha > 0.0) || !(beta_ml > 0.0) || !(gamma_ml >= 0.0) || !(c > 0.0) ||
      !(t > 0.0)) {
    throw DomainError("ml_asymptotic: requires alpha, beta_ml, c, t > 0 and gamma_ml >= 0");
  }
  if (beta_ml == alpha * gamma_ml) {
    throw DomainError("ml_asymptotic: excluded case beta_ml == alpha * gamma_ml");
  }
  auto rg = detail::log_reciprocal_gamma(static_cast<long double>(beta_ml) - alpha * gamma_ml);
  if (rg.sign == 0) return 0.0;
  double log_base = std::log(c) + alpha * std::log(t);
  return rg.sign * std::exp(static_cast<double>(rg.log_abs) - gamma_ml * log_base);
}

double mittag_leffler(double alpha, double beta, double x, double tol) {
  SeriesOptions opts;
  opts.tol = tol;
  return mittag_leffler_general(alpha, beta, 1.0, x, opts).value;
}

}  // namespace gflbdp
