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

#include "gflbdp/simulator.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gflbdp/errors.h"
#include "gflbdp/time_change.h"

namespace gflbdp {

std::int64_t SamplePath::state_at(double t) const {
  if (jump_times.empty()) throw DomainError("state_at: empty path");
  if (t < 0.0 || t > horizon) throw DomainError("state_at: time outside the simulated range");
  auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
  return states[static_cast<std::size_t>(it - jump_times.begin()) - 1];
}

ClockSampler::ClockSampler(const ProcessParams& params) {
  params.validate();
  if (!params.simulable()) {
    std::ostringstream os;
    os << "parameters (alpha=" << params.alpha << ", gamma=" << params.gamma
       << ", rho=" << params.rho
       << ") are not simulable: every outer index rho*ceil(gamma)/gamma - j*alpha "
          "must lie in (0, 1)";
    throw UnsupportedRegimeError(os.str());
  }
  if (params.gamma == 0.0) {
    if (params.rho == 1.0) {
      deterministic_ = true;
    } else {
      outer_.emplace_back(params.rho);
      weights_.push_back(1.0);
    }
    return;
  }
  const int c = params.gamma_ceiling();
  // Integer gamma makes the inner clock the identity.
  if (params.gamma != c) inner_.emplace(params.gamma / c);
  double binom = 1.0;
  for (int j = 0; j <= c; ++j) {
    outer_.emplace_back(params.rho * c / params.gamma - j * params.alpha);
    weights_.push_back(binom * std::pow(params.beta, j));
    binom = binom * (c - j) / (j + 1);
  }
}

double ClockSampler::step(double du, Rng& rng) const {
  if (deterministic_) return du;
  double inner = du;
  if (inner_) inner = inner_->increment(du, rng);
  double db = 0.0;
  for (std::size_t j = 0; j < outer_.size(); ++j) {
    db += outer_[j].increment(weights_[j] * inner, rng);
  }
  return db;
}

namespace {

double default_step(const ProcessParams& params, double t_ref, const GridConfig& cfg) {
  if (cfg.du > 0.0) return cfg.du;
  if (cfg.steps_per_mean < 1) throw DomainError("grid: steps_per_mean must be positive");
  if (!(t_ref > 0.0)) throw DomainError("first passage: reference time must be positive");
  TimeChangeMoments moments(params, t_ref);
  return moments.h(1) / cfg.steps_per_mean;
}

}  // namespace

FirstPassageSampler::FirstPassageSampler(const ProcessParams& params, double t_ref,
                                         GridConfig cfg)
    : clock_(params),
      du_(clock_.deterministic() ? 0.0 : default_step(params, t_ref, cfg)),
      max_steps_(cfg.max_steps) {}

double FirstPassageSampler::sample(double t, Rng& rng) const {
  return sample(std::vector<double>{t}, rng).front();
}

std::vector<double> FirstPassageSampler::sample(const std::vector<double>& times,
                                                Rng& rng) const {
  if (!std::is_sorted(times.begin(), times.end())) {
    throw DomainError("first passage: times must be sorted");
  }
  std::vector<double> out(times.size());
  if (clock_.deterministic()) {
    for (std::size_t i = 0; i < times.size(); ++i) out[i] = std::max(times[i], 0.0);
    return out;
  }
  double b = 0.0;
  std::int64_t k = 0;
  std::size_t i = 0;
  while (i < times.size() && times[i] < 0.0) out[i++] = 0.0;
  while (i < times.size()) {
    const double next = b + clock_.step(du_, rng);
    // Every pending time crossed in this step gets the step midpoint.
    while (i < times.size() && next > times[i]) out[i++] = (k + 0.5) * du_;
    b = next;
    if (++k >= max_steps_ && i < times.size()) {
      std::ostringstream os;
      os << "first passage above t=" << times[i] << " not reached within "
         << max_steps_ << " grid steps of size " << du_;
      throw HorizonError(os.str());
    }
  }
  return out;
}

SubordinatorGrid FirstPassageSampler::path_until(double t_max, Rng& rng) const {
  SubordinatorGrid g;
  g.u_grid.push_back(0.0);
  g.b_values.push_back(0.0);
  const double du = clock_.deterministic() ? std::max(t_max, 1e-300) / 1024.0 : du_;
  std::int64_t k = 0;
  while (g.b_values.back() <= t_max) {
    if (++k > max_steps_) throw HorizonError("clock path: grid step cap exceeded");
    g.u_grid.push_back(k * du);
    g.b_values.push_back(g.b_values.back() + clock_.step(du, rng));
  }
  return g;
}

SubordinatorGrid simulate_B(const ProcessParams& params, double u_max, int n_grid,
                            Rng& rng) {
  if (!(u_max > 0.0) || n_grid < 1) {
    throw DomainError("simulate_B: requires u_max > 0 and n_grid >= 1");
  }
  ClockSampler clock(params);
  SubordinatorGrid g;
  g.u_grid.resize(n_grid + 1);
  g.b_values.resize(n_grid + 1);
  const double du = u_max / n_grid;
  for (int k = 1; k <= n_grid; ++k) {
    g.u_grid[k] = k * du;
    const double db = clock.step(du, rng);
    if (!(db >= 0.0)) throw InternalError("simulate_B: negative or NaN clock increment");
    g.b_values[k] = g.b_values[k - 1] + db;
  }
  return g;
}

double sample_Q(const ProcessParams& params, double t, const GridConfig& cfg,
                Rng& rng) {
  if (!(t > 0.0)) throw DomainError("sample_Q: t must be positive");
  return FirstPassageSampler(params, t, cfg).sample(t, rng);
}

namespace {

// Event-driven simulation with state-dependent rates. `record` receives
// (time, new state) for every jump.
template <typename Rates, typename Record>
EndpointSample simulate_chain(std::int64_t n0, double horizon, Rates rates, Rng& rng,
                              const GillespieConfig& cfg, Record record,
                              bool* absorbed) {
  if (!(horizon >= 0.0)) throw DomainError("gillespie: horizon must be nonnegative");
  EndpointSample out{n0, 0.0};
  double t = 0.0;
  std::int64_t events = 0;
  for (;;) {
    auto [birth, death] = rates(out.state);
    const double total = birth + death;
    if (total <= 0.0) {
      out.integral += out.state * (horizon - t);
      if (absorbed) *absorbed = true;
      return out;
    }
    const double wait = rng.exponential() / total;
    if (t + wait >= horizon) {
      out.integral += out.state * (horizon - t);
      return out;
    }
    out.integral += out.state * wait;
    t += wait;
    out.state += rng.uniform() * total < birth ? 1 : -1;
    record(t, out.state);
    if (++events > cfg.max_events) {
      std::ostringstream os;
      os << "gillespie: more than " << cfg.max_events << " events before horizon "
         << horizon << " (state " << out.state << " at time " << t << ")";
      throw HorizonError(os.str());
    }
  }
}

auto linear_rates(double lambda, double mu) {
  return [lambda, mu](std::int64_t n) {
    return std::pair<double, double>{n * lambda, n * mu};
  };
}

auto bounded_rates(const GeneticParams& gp) {
  return [gp](std::int64_t n) {
    return std::pair<double, double>{(gp.M - n) * gp.lambda, n * gp.mu};
  };
}

void check_linear(double lambda, double mu, std::int64_t n0) {
  if (!(lambda >= 0.0) || !(mu >= 0.0) || !std::isfinite(lambda) || !std::isfinite(mu)) {
    throw DomainError("gillespie: rates must be finite and nonnegative");
  }
  if (n0 < 0) throw DomainError("gillespie: initial state must be nonnegative");
}

template <typename Rates>
SamplePath record_path(std::int64_t n0, double horizon, Rates rates, Rng& rng,
                       const GillespieConfig& cfg) {
  SamplePath p;
  p.horizon = horizon;
  p.jump_times.push_back(0.0);
  p.states.push_back(n0);
  simulate_chain(
      n0, horizon, rates, rng, cfg,
      [&p](double t, std::int64_t s) {
        p.jump_times.push_back(t);
        p.states.push_back(s);
      },
      &p.absorbed);
  return p;
}

}  // namespace

SamplePath gillespie_lbdp(double lambda, double mu, std::int64_t n0, double horizon,
                          Rng& rng, const GillespieConfig& cfg) {
  check_linear(lambda, mu, n0);
  return record_path(n0, horizon, linear_rates(lambda, mu), rng, cfg);
}

SamplePath gillespie_bounded(const GeneticParams& gp, double horizon, Rng& rng,
                             const GillespieConfig& cfg) {
  gp.validate();
  return record_path(gp.n0, horizon, bounded_rates(gp), rng, cfg);
}

EndpointSample run_lbdp(double lambda, double mu, std::int64_t n0, double horizon,
                        Rng& rng, const GillespieConfig& cfg) {
  check_linear(lambda, mu, n0);
  return simulate_chain(n0, horizon, linear_rates(lambda, mu), rng, cfg,
                        [](double, std::int64_t) {}, nullptr);
}

EndpointSample run_bounded(const GeneticParams& gp, double horizon, Rng& rng,
                           const GillespieConfig& cfg) {
  gp.validate();
  return simulate_chain(gp.n0, horizon, bounded_rates(gp), rng, cfg,
                        [](double, std::int64_t) {}, nullptr);
}

double path_integral(const SamplePath& path, double t) {
  if (path.jump_times.empty()) throw DomainError("path_integral: empty path");
  if (!(t >= 0.0) || t > path.horizon) {
    std::ostringstream os;
    os << "path_integral: t=" << t << " outside the simulated range [0, "
       << path.horizon << "]";
    throw DomainError(os.str());
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    const double lo = path.jump_times[i];
    if (lo >= t) break;
    const double hi = i + 1 < path.jump_times.size() ? std::min(path.jump_times[i + 1], t) : t;
    sum += path.states[i] * (hi - lo);
  }
  return sum;
}

EndpointSample sample_gflbdp(const ProcessParams& params, double t, Rng& rng,
                             const GridConfig& grid, const GillespieConfig& gcfg) {
  const double q = sample_Q(params, t, grid, rng);
  return run_lbdp(params.lambda, params.mu, 1, q, rng, gcfg);
}

SamplePath time_changed_path(const ProcessParams& params, double t_max, Rng& rng,
                             const GridConfig& grid, const GillespieConfig& gcfg) {
  if (!(t_max > 0.0)) throw DomainError("time_changed_path: t_max must be positive");
  FirstPassageSampler sampler(params, t_max, grid);
  const SubordinatorGrid clock = sampler.path_until(t_max, rng);
  const std::size_t last = clock.u_grid.size() - 1;
  const double du = clock.u_grid[1];
  const double q = clock.u_grid[last] - 0.5 * du;
  const SamplePath op = gillespie_lbdp(params.lambda, params.mu, 1, q, rng, gcfg);

  SamplePath out;
  out.horizon = t_max;
  out.jump_times.push_back(0.0);
  out.states.push_back(op.states.front());
  for (std::size_t i = 1; i < op.jump_times.size(); ++i) {
    const double tau = op.jump_times[i];
    const std::size_t k = std::min(static_cast<std::size_t>(tau / du), last - 1);
    const double frac = tau / du - static_cast<double>(k);
    double real = clock.b_values[k] + frac * (clock.b_values[k + 1] - clock.b_values[k]);
    if (real > t_max) break;
    real = std::max(real, std::nextafter(out.jump_times.back(), t_max));
    out.jump_times.push_back(real);
    out.states.push_back(op.states[i]);
  }
  out.absorbed = out.states.back() == 0;
  return out;
}

}  // namespace gflbdp
