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

// Helpers shared by the analytics translation units. Not installed.

#ifndef GFLBDP_SRC_DETAIL_H_
#define GFLBDP_SRC_DETAIL_H_

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gflbdp/errors.h"
#include "gflbdp/time_change.h"

namespace gflbdp::detail {

struct SeriesResult {
  double value = 0.0;
  double error = 0.0;
  int terms = 0;
  double largest = 0.0;
  bool converged = false;
};

// Sums term(k) for k = 0, 1, ... where term returns {value, absolute error}.
// Stops after three consecutive non-increasing terms below tol * |sum|.
// converged is false when the cap is hit or the accumulated error exceeds
// tol * max(1, |sum|).
template <class Term>
SeriesResult sum_series(Term&& term, double tol, int max_terms) {
  SeriesResult r;
  double abs_sum = 0.0, prev = std::numeric_limits<double>::infinity();
  int small_run = 0;
  int k = 0;
  for (; k < max_terms; ++k) {
    std::pair<double, double> tk = term(k);
    if (!std::isfinite(tk.first)) break;
    r.value += tk.first;
    r.error += tk.second;
    const double a = std::fabs(tk.first);
    abs_sum += a;
    r.largest = std::max(r.largest, a);
    if (a <= 0.01 * tol * std::fabs(r.value) || a < 1e-300) {
      small_run = a <= prev ? small_run + 1 : 0;
      if (small_run >= 3) {
        ++k;
        r.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
    prev = a;
  }
  r.terms = k;
  r.error += 4.0 * std::numeric_limits<double>::epsilon() * abs_sum +
             (std::isfinite(prev) ? prev : 0.0);
  r.converged = r.converged && std::isfinite(r.value) &&
                r.error <= tol * std::max(1.0, std::fabs(r.value));
  return r;
}

// Probabilities may overshoot [0, 1] by roundoff. Anything beyond slack is
// reported as an internal inconsistency rather than silently clamped.
inline double checked_probability(double v, const char* what, double slack = 1e-7) {
  if (!(v >= -slack && v <= 1.0 + slack)) {
    std::ostringstream os;
    os << what << " evaluated to " << v << ", outside [0, 1]";
    throw InternalError(os.str());
  }
  return std::min(1.0, std::max(0.0, v));
}

inline void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and >= 0");
  }
}

// S(i d, t) for i = 1, 2, ..., cached with absolute error estimates. The
// outer sums of the extinction and state-probability series only ever need
// integer multiples of |lambda - mu|.
class IntegerRateSurvival {
 public:
  IntegerRateSurvival(TimeChangeMoments& m, double d) : m_(m), d_(d) {}
  double operator()(int i) {
    fill(i);
    return s_[i - 1];
  }
  double error(int i) {
    fill(i);
    return e_[i - 1];
  }

 private:
  void fill(int i) {
    while (static_cast<int>(s_.size()) < i) {
      SeriesDiagnostics d;
      s_.push_back(m_.laplace_q(d_ * static_cast<double>(s_.size() + 1), 0, &d));
      e_.push_back(std::max(d.error_estimate,
                            4.0 * std::numeric_limits<double>::epsilon()));
    }
  }

  TimeChangeMoments& m_;
  double d_;
  std::vector<double> s_;
  std::vector<double> e_;
};

// Parameters of the large-t surrogate: gamma = 0, rho - alpha gamma, and both
// rates scaled by beta^{-gamma}.
ProcessParams asymptotic_params(const ProcessParams& p);

}  // namespace gflbdp::detail

#endif  // GFLBDP_SRC_DETAIL_H_
