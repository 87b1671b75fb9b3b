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

#ifndef GFLBDP_LAPLACE_H_
#define GFLBDP_LAPLACE_H_

#include <complex>
#include <functional>
#include <vector>

#include "gflbdp/quadrature.h"

namespace gflbdp {

struct ProcessParams;

// The symbol eta(w) = w^rho (1 + beta w^{-alpha})^gamma that replaces w in
// every transform of the time-changed process.
struct LaplaceSymbol {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double rho = 1.0;

  static LaplaceSymbol from(const ProcessParams& p);
};

double laplace_symbol(const LaplaceSymbol& sym, double w);
// Principal branches; analytic in the plane cut along the negative axis.
std::complex<double> laplace_symbol(const LaplaceSymbol& sym,
                                    std::complex<double> w);

// |a / eta(w)|, the quantity that must stay below one for the geometric
// expansions of the transforms to hold.
double symbol_ratio(const LaplaceSymbol& sym, double w, double a);

struct ForwardLaplaceConfig {
  QuadratureConfig quad{1e-11, 1e-14, 18};
  // Truncation horizon; zero picks T with exp(-w T) < 1e-12.
  double horizon = 0.0;
};

struct ForwardLaplaceResult {
  double value = 0.0;
  double quadrature_error = 0.0;
  double horizon = 0.0;
  // exp(-w T) * sup |f| over [T-1, T], sampled.
  double truncation_bound = 0.0;
};

ForwardLaplaceResult forward_laplace(const std::function<double(double)>& f,
                                     double w,
                                     const ForwardLaplaceConfig& cfg = {});

enum class InversionMethod { kGaverStehfest, kTalbot };

struct InversionConfig {
  InversionMethod method = InversionMethod::kGaverStehfest;
  int order = 14;
  double t_min = 1e-10;
  // Abscissa shift sigma: f(t) = e^{sigma t} L^{-1}[F(w + sigma)](t). Needed
  // when F has singularities with positive real part.
  double shift = 0.0;
  // Gaver-Stehfest only. In double precision the best order depends on the
  // transform, so when set the orders 14, 16, 18, 20 are formed from one set
  // of samples and the higher order of the best-agreeing consecutive pair is
  // returned. `order` is then ignored.
  bool adaptive_order = true;

  static InversionConfig gaver_stehfest(int order = 14) {
    return {InversionMethod::kGaverStehfest, order, 1e-10, 0.0, false};
  }
  static InversionConfig talbot(int nodes = 24) {
    return {InversionMethod::kTalbot, nodes, 1e-10, 0.0, false};
  }
};

void validate(const InversionConfig& cfg);

using RealTransform = std::function<double(double)>;
using ComplexTransform =
    std::function<std::complex<double>(std::complex<double>)>;

// Gaver-Stehfest only; a Talbot config with a real transform is a DomainError.
double invert_laplace(const RealTransform& F, double t,
                      const InversionConfig& cfg = {});
// Either method. For Gaver-Stehfest the transform is sampled on the real axis.
double invert_laplace(const ComplexTransform& F, double t,
                      const InversionConfig& cfg);

// Talbot inversion of a transform whose original is complex valued, so the
// conjugate half of the contour is summed explicitly instead of folded.
std::complex<double> invert_laplace_complex(const ComplexTransform& F, double t,
                                            const InversionConfig& cfg);

// Stehfest weights V_1..V_N (index 0 unused).
const std::vector<long double>& stehfest_weights(int order);

}  // namespace gflbdp

#endif  // GFLBDP_LAPLACE_H_
