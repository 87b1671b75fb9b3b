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

#ifndef GFLBDP_SIMULATOR_H_
#define GFLBDP_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gflbdp/process_params.h"
#include "gflbdp/rng.h"
#include "gflbdp/stable.h"

namespace gflbdp {

// Piecewise-constant birth-death trajectory. states[i] holds on
// [jump_times[i], jump_times[i+1]), the last state until `horizon`.
struct SamplePath {
  std::vector<double> jump_times;  // starts at 0
  std::vector<std::int64_t> states;
  bool absorbed = false;
  double horizon = 0.0;

  std::int64_t state_at(double t) const;
};

// Samples of the composed subordinator B(u) on a uniform grid.
struct SubordinatorGrid {
  std::vector<double> u_grid;    // 0, du, 2 du, ...
  std::vector<double> b_values;  // nondecreasing, b_values[0] = 0
};

struct GridConfig {
  // Step du = E[Q(t)] / steps_per_mean, unless du is set explicitly (> 0).
  int steps_per_mean = 512;
  double du = 0.0;
  // Cap on grid steps per first passage; exceeding it is a HorizonError.
  std::int64_t max_steps = std::int64_t{1} << 24;
};

struct GillespieConfig {
  // Cap on the number of events per path; exceeding it is a HorizonError.
  std::int64_t max_events = 10'000'000;
};

// Draws increments of the clock B(u) = sum_j L_{nu_j}(Y_j(u)) with
// Y_j(u) = C(c, j) beta^j L_{gamma/c}(u), c = ceil(gamma), nu_j =
// rho c / gamma - j alpha. The beta^j factor makes the Laplace exponent
// exactly w^rho (1 + beta w^-alpha)^gamma. For gamma = 0 the clock is a
// single rho-stable subordinator, and for rho = 1 as well it is u itself.
class ClockSampler {
 public:
  // Throws UnsupportedRegimeError unless params.simulable().
  explicit ClockSampler(const ProcessParams& params);

  // Increment of B over a step of operational time du.
  double step(double du, Rng& rng) const;
  bool deterministic() const { return deterministic_; }

 private:
  bool deterministic_ = false;
  std::optional<StableSampler> inner_;  // empty when the inner clock is u
  std::vector<StableSampler> outer_;
  std::vector<double> weights_;  // C(c, j) beta^j
};

// First passage Q(t) = inf{u : B(u) > t}, located on a uniform u-grid and
// reported as the midpoint of the bracketing step (bias O(du)). The grid
// step is tied to a reference time so all passages share one resolution.
class FirstPassageSampler {
 public:
  FirstPassageSampler(const ProcessParams& params, double t_ref,
                      GridConfig cfg = {});

  double du() const { return du_; }

  double sample(double t, Rng& rng) const;
  // Passages for increasing times along one clock path, so the results are
  // nondecreasing in t.
  std::vector<double> sample(const std::vector<double>& times, Rng& rng) const;
  // Clock path until it first exceeds t_max (one step past the crossing).
  SubordinatorGrid path_until(double t_max, Rng& rng) const;

 private:
  ClockSampler clock_;
  double du_;
  std::int64_t max_steps_;
};

SubordinatorGrid simulate_B(const ProcessParams& params, double u_max, int n_grid,
                            Rng& rng);

double sample_Q(const ProcessParams& params, double t, const GridConfig& cfg,
                Rng& rng);

SamplePath gillespie_lbdp(double lambda, double mu, std::int64_t n0, double horizon,
                          Rng& rng, const GillespieConfig& cfg = {});

SamplePath gillespie_bounded(const GeneticParams& gp, double horizon, Rng& rng,
                             const GillespieConfig& cfg = {});

// Exact integral of the path over [0, t]; t must not exceed the horizon.
double path_integral(const SamplePath& path, double t);

// End state and path integral of a linear birth-death process run to
// `horizon`, without storing the trajectory.
struct EndpointSample {
  std::int64_t state = 0;
  double integral = 0.0;
};

EndpointSample run_lbdp(double lambda, double mu, std::int64_t n0, double horizon,
                        Rng& rng, const GillespieConfig& cfg = {});
EndpointSample run_bounded(const GeneticParams& gp, double horizon, Rng& rng,
                           const GillespieConfig& cfg = {});

// (N(Q(t)), Y(Q(t))) for the process started from one individual.
EndpointSample sample_gflbdp(const ProcessParams& params, double t, Rng& rng,
                             const GridConfig& grid = {},
                             const GillespieConfig& gcfg = {});

// Trajectory of N(Q(s)) for s in [0, t_max], jump times in real time. Jumps
// inside one clock step are placed by linear interpolation of B.
SamplePath time_changed_path(const ProcessParams& params, double t_max, Rng& rng,
                             const GridConfig& grid = {},
                             const GillespieConfig& gcfg = {});

}  // namespace gflbdp

#endif  // GFLBDP_SIMULATOR_H_
