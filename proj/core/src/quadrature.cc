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

#include "gflbdp/quadrature.h"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gflbdp/errors.h"

namespace gflbdp {

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg) {
  using boost::math::quadrature::gauss_kronrod;
  QuadratureResult r;
  if (a == b) return r;
  r.value = gauss_kronrod<double, 31>::integrate(f, a, b, cfg.max_depth,
                                                  cfg.rel_tol, &r.error, &r.l1);
  if (!std::isfinite(r.value)) {
    throw NumericError("quadrature produced a non-finite value");
  }
  const double target = std::max(cfg.rel_tol * std::max(r.l1, std::fabs(r.value)),
                                 cfg.abs_tol);
  // Boost stops at max_depth without complaint; surface that as an error when
  // the estimate is far from the goal.
  if (r.error > 100.0 * target && r.error > 1e3 * std::numeric_limits<double>::epsilon() * r.l1) {
    std::ostringstream os;
    os << "adaptive quadrature on [" << a << ", " << b
       << "] did not converge: error estimate " << r.error << " vs target "
       << target;
    throw NumericError(os.str(), r.error);
  }
  return r;
}

}  // namespace gflbdp
