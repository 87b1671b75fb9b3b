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

#include "gflbdp/process_params.h"

#include <cmath>
#include <sstream>

#include "gflbdp/errors.h"

namespace gflbdp {

std::string to_string(RateRegime r) {
  switch (r) {
    case RateRegime::kEqual:
      return "equal";
    case RateRegime::kBirthBelowDeath:
      return "birth<death";
    case RateRegime::kBirthAboveDeath:
      return "birth>death";
  }
  return "unknown";
}

int ProcessParams::gamma_ceiling() const {
  return static_cast<int>(std::ceil(gamma));
}

void ProcessParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(lambda) || !finite(mu) || !finite(alpha) || !finite(beta) ||
      !finite(gamma) || !finite(rho)) {
    throw DomainError("process parameters must be finite");
  }
  std::ostringstream os;
  if (!(lambda > 0.0)) os << "lambda must be > 0; ";
  if (!(mu >= 0.0)) os << "mu must be >= 0; ";
  if (!(alpha > 0.0 && alpha <= 1.0)) os << "alpha must lie in (0,1]; ";
  if (!(beta > 0.0)) os << "beta must be > 0; ";
  if (!(gamma >= 0.0)) os << "gamma must be >= 0; ";
  if (!(rho > 0.0 && rho <= 1.0)) os << "rho must lie in (0,1]; ";
  if (gamma > 0.0) {
    const int c = gamma_ceiling();
    for (int j = 0; j <= c; ++j) {
      double idx = rho * c / gamma - j * alpha;
      if (!(std::fabs(idx) < 1.0)) {
        os << "ceiling constraint |rho*ceil(gamma)/gamma - j*alpha| < 1 fails at j="
           << j << " (value " << idx << "); ";
        break;
      }
    }
  }
  std::string msg = os.str();
  if (!msg.empty()) {
    msg.resize(msg.size() - 2);
    throw DomainError("invalid process parameters: " + msg);
  }
}

bool ProcessParams::simulable() const {
  if (gamma == 0.0) return rho > 0.0 && rho <= 1.0;
  const int c = gamma_ceiling();
  for (int j = 0; j <= c; ++j) {
    double idx = rho * c / gamma - j * alpha;
    if (!(idx > 0.0 && idx < 1.0)) return false;
  }
  return true;
}

RateRegime ProcessParams::regime() const {
  if (std::fabs(lambda - mu) < 1e-8 * (lambda + mu)) return RateRegime::kEqual;
  return lambda < mu ? RateRegime::kBirthBelowDeath : RateRegime::kBirthAboveDeath;
}

void PrabhakarIntegralParams::validate() const {
  if (!(alpha_p > 0.0 && alpha_p <= 1.0) || !(rho_p > 0.0 && rho_p <= 1.0) ||
      !(beta_p > 0.0) || !(gamma_p >= 0.0) || !std::isfinite(beta_p) ||
      !std::isfinite(gamma_p)) {
    throw DomainError(
        "invalid Prabhakar integral parameters: need alpha' and rho' in (0,1], "
        "beta' > 0, gamma' >= 0");
  }
}

void GeneticParams::validate() const {
  std::ostringstream os;
  if (M <= 0 || M % 2 != 0) os << "M must be a positive even integer; ";
  if (!(n0 > 0 && n0 < M)) os << "n0 must satisfy 0 < n0 < M; ";
  if (!(lambda > 0.0) || !std::isfinite(lambda)) os << "lambda must be > 0; ";
  if (!(mu > 0.0) || !std::isfinite(mu)) os << "mu must be > 0; ";
  if (!(rho > 0.0 && rho <= 1.0)) os << "rho must lie in (0,1]; ";
  std::string msg = os.str();
  if (!msg.empty()) {
    msg.resize(msg.size() - 2);
    throw DomainError("invalid genetic parameters: " + msg);
  }
}

}  // namespace gflbdp
