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

#ifndef GFLBDP_QUADRATURE_H_
#define GFLBDP_QUADRATURE_H_

#include <functional>

namespace gflbdp {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  unsigned max_depth = 18;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

// Adaptive 31-point Gauss-Kronrod on [a, b]; `b` may be +infinity. Throws
// NumericError when the error estimate stays above the requested tolerance.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg = {});

}  // namespace gflbdp

#endif  // GFLBDP_QUADRATURE_H_
