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

#include "detail.h"
#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/special_functions.h"

namespace gflbdp {

// The bounded model's clock is an inverse rho-stable subordinator, so every
// formula here is a two-parameter Mittag-Leffler expression.

double genetic_mean(const GeneticParams& gp, double t) {
  gp.validate();
  detail::check_time(t);
  const double c = gp.lambda + gp.mu;
  const double e = mittag_leffler(gp.rho, 1.0, -c * std::pow(t, gp.rho));
  return gp.n0 * e + gp.stationary_mean() * (1.0 - e);
}

double genetic_avg_type_h(const GeneticParams& gp, double t) {
  gp.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time must be > 0");
  const double c = gp.lambda + gp.mu;
  const double e2 = mittag_leffler(gp.rho, 2.0, -c * std::pow(t, gp.rho));
  return (gp.n0 - gp.stationary_mean()) * e2 + gp.stationary_mean();
}

double genetic_avg_type_h_asymptotic(const GeneticParams& gp, double t) {
  gp.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time must be > 0");
  const double c = gp.lambda + gp.mu;
  return (gp.n0 - gp.stationary_mean()) /
             (std::tgamma(2.0 - gp.rho) * c * std::pow(t, gp.rho)) +
         gp.stationary_mean();
}

double genetic_time_changed_path_integral_mean(const GeneticParams& gp, double t) {
  gp.validate();
  detail::check_time(t);
  const double c = gp.lambda + gp.mu;
  const double tr = std::pow(t, gp.rho);
  const double e = mittag_leffler(gp.rho, 1.0, -c * tr);
  return (gp.n0 - gp.stationary_mean()) * (1.0 - e) / c +
         gp.stationary_mean() * tr / std::tgamma(gp.rho + 1.0);
}

}  // namespace gflbdp
