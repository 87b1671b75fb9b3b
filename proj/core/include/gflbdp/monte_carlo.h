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

#ifndef GFLBDP_MONTE_CARLO_H_
#define GFLBDP_MONTE_CARLO_H_

#include <cstdint>
#include <string>

#include "gflbdp/process_params.h"
#include "gflbdp/simulator.h"

namespace gflbdp {

enum class MCKind {
  kMean,              // E N(Q(t))
  kVariance,          // Var N(Q(t))
  kExtinction,        // P{N(Q(t)) = 0}
  kStatePMF,          // P{N(Q(t)) = n}
  kJointCF,           // E exp(i u N(Q(t)) + i v Y(Q(t)))
  kPathIntegralMean,  // E Y(Q(t))
  kLaplaceQ,          // E exp(-z Q(t))
  kGeneticMean,       // E N_rho(t) for the bounded model
  kGeneticPathIntegralMean,
};

// Kinds are parsed from and printed as lowercase names such as "mean",
// "state-pmf" or "joint-cf". Parsing throws DomainError on unknown names.
MCKind parse_mc_kind(const std::string& name);
std::string to_string(MCKind kind);

struct MCQuery {
  MCKind kind = MCKind::kMean;
  double t = 1.0;
  std::int64_t n = 0;  // state for kStatePMF
  double u = 0.0;      // joint CF arguments
  double v = 0.0;
  double z = 1.0;      // Laplace argument for kLaplaceQ
};

struct MCOptions {
  std::int64_t n_paths = 20000;
  std::uint64_t seed = 20260101;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  GridConfig grid;
  GillespieConfig gillespie;
};

// Monte Carlo estimate. For plain averages std_error is the sample standard
// deviation over sqrt(n_paths); for kVariance it is the delta-method error
// of the sample variance. kJointCF fills the imaginary fields as well.
struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double im_value = 0.0;
  double im_std_error = 0.0;
  std::int64_t n_paths = 0;  // paths that completed
  std::int64_t failed_paths = 0;
  std::uint64_t seed = 0;

  double failure_fraction() const {
    const auto total = n_paths + failed_paths;
    return total ? static_cast<double>(failed_paths) / total : 0.0;
  }
};

// Path i draws all of its randomness from Rng(seed, i), and samples are
// reduced pairwise in path order, so results are bit-identical for any
// thread count. Paths that hit a simulation cap are counted in
// failed_paths and left out; if every path fails the last error is thrown.
MCEstimate mc_estimate(const ProcessParams& params, const MCQuery& query,
                       const MCOptions& opts = {});

// Bounded genetic model; query.kind must be kGeneticMean or
// kGeneticPathIntegralMean. The time change is the inverse rho-stable
// subordinator (identity when rho = 1).
MCEstimate mc_estimate(const GeneticParams& gp, const MCQuery& query,
                       const MCOptions& opts = {});

}  // namespace gflbdp

#endif  // GFLBDP_MONTE_CARLO_H_
