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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "gflbdp/gflbdp.h"

namespace {

using namespace gflbdp;

ProcessParams p9() {
  ProcessParams p;
  p.lambda = 1.0;
  p.mu = 0.5;
  p.alpha = 0.5;
  p.beta = 1.0;
  p.gamma = 0.9;
  p.rho = 0.8;
  return p;
}

// Series evaluation of E^g_{a,b}(x) at x = -1 and -5, then the asymptotic
// branch at -40 and -200. Between roughly -8 and -30 the series loses too many
// digits to cancellation and the evaluator reports a divergence instead.
void BM_MittagLeffler(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler_general(0.7, 1.2, 0.9, x, {}).value);
  }
}
BENCHMARK(BM_MittagLeffler)->Arg(1)->Arg(5)->Arg(40)->Arg(200);

void BM_MeanSeries(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mean_gflbdp(p9(), t));
}
BENCHMARK(BM_MeanSeries)->Arg(1)->Arg(5)->Arg(20);

void BM_MeanGaverStehfest(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(laplace_route::mean(p9(), 1.0));
}
BENCHMARK(BM_MeanGaverStehfest);

void BM_Extinction(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extinction_prob(p9(), t));
}
BENCHMARK(BM_Extinction)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_StatePmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(state_prob(p9(), n, 1.0));
}
BENCHMARK(BM_StatePmf)->Arg(1)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_JointCf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(joint_cf_gflbdp(0.5, 0.3, p9(), 1.0));
}
BENCHMARK(BM_JointCf)->Unit(benchmark::kMicrosecond);

void BM_StableDraw(benchmark::State& state) {
  StableSampler s(0.7);
  Rng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s(rng));
}
BENCHMARK(BM_StableDraw);

// One full path: first passage of the clock, then Gillespie up to Q(t).
void BM_GflbdpPath(benchmark::State& state) {
  const ProcessParams p = p9();
  GridConfig grid;
  grid.steps_per_mean = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng(7, i++);
    benchmark::DoNotOptimize(sample_gflbdp(p, 1.0, rng, grid).state);
  }
}
BENCHMARK(BM_GflbdpPath)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloMean(benchmark::State& state) {
  MCOptions opts;
  opts.n_paths = state.range(0);
  opts.threads = 1;
  MCQuery q;
  q.kind = MCKind::kMean;
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate(p9(), q, opts).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloMean)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
