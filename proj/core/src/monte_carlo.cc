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

#include "gflbdp/monte_carlo.h"

#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "gflbdp/errors.h"

namespace gflbdp {
namespace {

struct KindName {
  MCKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {MCKind::kMean, "mean"},
    {MCKind::kVariance, "variance"},
    {MCKind::kExtinction, "extinction"},
    {MCKind::kStatePMF, "state-pmf"},
    {MCKind::kJointCF, "joint-cf"},
    {MCKind::kPathIntegralMean, "path-integral-mean"},
    {MCKind::kLaplaceQ, "laplace-q"},
    {MCKind::kGeneticMean, "genetic-mean"},
    {MCKind::kGeneticPathIntegralMean, "genetic-path-integral-mean"},
};

using Sample = std::array<double, 2>;
using PathFn = std::function<Sample(Rng&)>;

struct PathBatch {
  std::vector<Sample> samples;  // successful paths, in path order
  std::int64_t failed = 0;
};

struct ThreadResult {
  std::vector<Sample> samples;
  std::int64_t failed = 0;
  std::string last_failure;
  std::exception_ptr error;
};

PathBatch run_paths(const MCOptions& opts, const PathFn& fn) {
  if (opts.n_paths < 100) throw DomainError("mc_estimate: n_paths must be at least 100");
  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, opts.n_paths));

  std::vector<ThreadResult> results(threads);
  auto work = [&](unsigned k) {
    const std::int64_t lo = opts.n_paths * k / threads;
    const std::int64_t hi = opts.n_paths * (k + 1) / threads;
    ThreadResult& r = results[k];
    r.samples.reserve(static_cast<std::size_t>(hi - lo));
    try {
      for (std::int64_t i = lo; i < hi; ++i) {
        Rng rng(opts.seed, static_cast<std::uint64_t>(i));
        try {
          r.samples.push_back(fn(rng));
        } catch (const HorizonError& e) {
          ++r.failed;
          r.last_failure = e.what();
        }
      }
    } catch (...) {
      r.error = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, k);
    for (auto& th : pool) th.join();
  }

  PathBatch batch;
  std::string last_failure;
  for (auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    batch.samples.insert(batch.samples.end(), r.samples.begin(), r.samples.end());
    batch.failed += r.failed;
    if (!r.last_failure.empty()) last_failure = r.last_failure;
  }
  if (batch.samples.empty()) {
    throw HorizonError("mc_estimate: every path failed; last error: " + last_failure);
  }
  return batch;
}

// Pairwise summation over a fixed order, so the result does not depend on
// how the paths were scheduled.
template <typename F>
double pairwise_sum(std::span<const Sample> xs, F f) {
  if (xs.size() <= 32) {
    double s = 0.0;
    for (const auto& x : xs) s += f(x);
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half), f) + pairwise_sum(xs.subspan(half), f);
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // unbiased
  double m4 = 0.0;   // central fourth moment
};

Moments moments(std::span<const Sample> xs, int comp) {
  const double n = static_cast<double>(xs.size());
  Moments m;
  m.mean = pairwise_sum(xs, [comp](const Sample& s) { return s[comp]; }) / n;
  const double mean = m.mean;
  const double ss = pairwise_sum(xs, [=](const Sample& s) {
    const double d = s[comp] - mean;
    return d * d;
  });
  m.var = xs.size() > 1 ? ss / (n - 1.0) : 0.0;
  m.m4 = pairwise_sum(xs, [=](const Sample& s) {
           const double d = s[comp] - mean;
           return d * d * d * d;
         }) / n;
  return m;
}

MCEstimate summarize(const PathBatch& batch, const MCOptions& opts, bool variance,
                     bool complex) {
  MCEstimate est;
  est.n_paths = static_cast<std::int64_t>(batch.samples.size());
  est.failed_paths = batch.failed;
  est.seed = opts.seed;
  const double n = static_cast<double>(est.n_paths);
  const Moments re = moments(batch.samples, 0);
  if (variance) {
    est.value = re.var;
    est.std_error = std::sqrt(std::max(0.0, re.m4 - re.var * re.var) / n);
  } else {
    est.value = re.mean;
    est.std_error = std::sqrt(re.var / n);
  }
  if (complex) {
    const Moments im = moments(batch.samples, 1);
    est.im_value = im.mean;
    est.im_std_error = std::sqrt(im.var / n);
  }
  return est;
}

}  // namespace

MCKind parse_mc_kind(const std::string& name) {
  for (const auto& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  throw DomainError("unknown Monte Carlo kind '" + name + "'");
}

std::string to_string(MCKind kind) {
  for (const auto& k : kKindNames) {
    if (kind == k.kind) return k.name;
  }
  return "unknown";
}

MCEstimate mc_estimate(const ProcessParams& params, const MCQuery& q,
                       const MCOptions& opts) {
  if (!(q.t > 0.0) || !std::isfinite(q.t)) throw DomainError("mc_estimate: t must be positive");
  if (q.kind == MCKind::kGeneticMean || q.kind == MCKind::kGeneticPathIntegralMean) {
    throw DomainError("mc_estimate: genetic kinds need GeneticParams");
  }
  if (q.kind == MCKind::kStatePMF && q.n < 0) {
    throw DomainError("mc_estimate: state must be nonnegative");
  }
  const FirstPassageSampler passage(params, q.t, opts.grid);
  const double lambda = params.lambda;
  const double mu = params.mu;
  auto endpoint = [&](Rng& rng) {
    const double tau = passage.sample(q.t, rng);
    return run_lbdp(lambda, mu, 1, tau, rng, opts.gillespie);
  };

  PathFn fn;
  switch (q.kind) {
    case MCKind::kMean:
    case MCKind::kVariance:
      fn = [&](Rng& rng) { return Sample{static_cast<double>(endpoint(rng).state), 0.0}; };
      break;
    case MCKind::kExtinction:
      fn = [&](Rng& rng) { return Sample{endpoint(rng).state == 0 ? 1.0 : 0.0, 0.0}; };
      break;
    case MCKind::kStatePMF:
      fn = [&](Rng& rng) { return Sample{endpoint(rng).state == q.n ? 1.0 : 0.0, 0.0}; };
      break;
    case MCKind::kJointCF:
      fn = [&](Rng& rng) {
        const EndpointSample e = endpoint(rng);
        const double phase = q.u * static_cast<double>(e.state) + q.v * e.integral;
        return Sample{std::cos(phase), std::sin(phase)};
      };
      break;
    case MCKind::kPathIntegralMean:
      fn = [&](Rng& rng) { return Sample{endpoint(rng).integral, 0.0}; };
      break;
    case MCKind::kLaplaceQ:
      fn = [&](Rng& rng) { return Sample{std::exp(-q.z * passage.sample(q.t, rng)), 0.0}; };
      break;
    default:
      throw InternalError("mc_estimate: unhandled kind");
  }
  return summarize(run_paths(opts, fn), opts, q.kind == MCKind::kVariance,
                   q.kind == MCKind::kJointCF);
}

MCEstimate mc_estimate(const GeneticParams& gp, const MCQuery& q, const MCOptions& opts) {
  gp.validate();
  if (!(q.t > 0.0) || !std::isfinite(q.t)) throw DomainError("mc_estimate: t must be positive");
  if (q.kind != MCKind::kGeneticMean && q.kind != MCKind::kGeneticPathIntegralMean) {
    throw DomainError("mc_estimate: only genetic kinds apply to GeneticParams");
  }
  ProcessParams clock;
  clock.gamma = 0.0;
  clock.rho = gp.rho;
  const FirstPassageSampler passage(clock, q.t, opts.grid);
  const bool integral = q.kind == MCKind::kGeneticPathIntegralMean;
  PathFn fn = [&](Rng& rng) {
    const EndpointSample e = run_bounded(gp, passage.sample(q.t, rng), rng, opts.gillespie);
    return Sample{integral ? e.integral : static_cast<double>(e.state), 0.0};
  };
  return summarize(run_paths(opts, fn), opts, false, false);
}

}  // namespace gflbdp
