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

#include "gflbdp/stable.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gflbdp/errors.h"

namespace gflbdp {

StableSampler::StableSampler(double nu) : nu_(nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    std::ostringstream os;
    os << "stable index must lie in (0, 1), got " << nu;
    throw DomainError(os.str());
  }
  inv_nu_ = 1.0 / nu;
  tail_power_ = (1.0 - nu) / nu;
}

double StableSampler::operator()(Rng& rng) const {
  // Kanter: X = sin(nu U) / sin(U)^(1/nu) * (sin((1-nu) U) / E)^((1-nu)/nu)
  // with U uniform on (0, pi). Evaluated in logs so that U near 0 is safe.
  const double u = std::numbers::pi * rng.uniform();
  const double e = rng.exponential();
  const double log_x = std::log(std::sin(nu_ * u)) - inv_nu_ * std::log(std::sin(u)) +
                       tail_power_ * (std::log(std::sin((1.0 - nu_) * u)) - std::log(e));
  return std::exp(log_x);
}

double StableSampler::increment(double dt, Rng& rng) const {
  if (dt < 0.0) throw DomainError("stable increment: dt must be nonnegative");
  if (dt == 0.0) return 0.0;
  return std::pow(dt, inv_nu_) * (*this)(rng);
}

double stable_increment(double nu, double dt, Rng& rng) {
  if (!(dt > 0.0)) throw DomainError("stable_increment: dt must be positive");
  return StableSampler(nu).increment(dt, rng);
}

}  // namespace gflbdp
