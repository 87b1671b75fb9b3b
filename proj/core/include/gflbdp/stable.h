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

#ifndef GFLBDP_STABLE_H_
#define GFLBDP_STABLE_H_

#include "gflbdp/rng.h"

namespace gflbdp {

// One-sided nu-stable law with E exp(-z X) = exp(-z^nu), sampled with
// Kanter's representation from one uniform and one exponential variate.
class StableSampler {
 public:
  // Throws DomainError unless 0 < nu < 1.
  explicit StableSampler(double nu);

  double nu() const { return nu_; }

  // Standard sample (dt = 1).
  double operator()(Rng& rng) const;

  // Increment of the subordinator over a time step dt >= 0, i.e.
  // dt^(1/nu) times a standard sample. Returns 0 for dt = 0.
  double increment(double dt, Rng& rng) const;

 private:
  double nu_;
  double inv_nu_;
  double tail_power_;  // (1 - nu) / nu
};

// Convenience wrapper for a single draw; prefer StableSampler in loops.
double stable_increment(double nu, double dt, Rng& rng);

}  // namespace gflbdp

#endif  // GFLBDP_STABLE_H_
