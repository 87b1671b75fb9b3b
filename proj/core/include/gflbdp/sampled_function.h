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

#ifndef GFLBDP_SAMPLED_FUNCTION_H_
#define GFLBDP_SAMPLED_FUNCTION_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace gflbdp {

enum class Interpolation { kLinear, kCubicMonotone };

// A function known on a grid 0 = t_0 < t_1 < ... < t_N, interpolated either
// piecewise linearly or with a monotone cubic (PCHIP) so that it can be fed
// to the fractional operators.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> grid, std::vector<double> values,
                  Interpolation interp = Interpolation::kCubicMonotone);

  static SampledFunction sample(const std::function<double(double)>& f,
                                std::vector<double> grid,
                                Interpolation interp = Interpolation::kCubicMonotone);

  double operator()(double t) const;
  double derivative(double t) const;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  Interpolation interpolation() const { return interp_; }
  double t_max() const { return grid_.back(); }

 private:
  std::size_t interval(double t) const;

  std::vector<double> grid_;
  std::vector<double> values_;
  Interpolation interp_;
  struct Cubic;
  std::shared_ptr<const Cubic> cubic_;
};

// Grid with n+1 points on [0, t_max]: zero, then geometric spacing from
// t_first up to t_switch, then uniform. Resolves the t^{rho-1} type
// behaviour of the solutions near the origin.
std::vector<double> residual_grid(double t_max, int n = 400,
                                  double t_first = 1e-6);

}  // namespace gflbdp

#endif  // GFLBDP_SAMPLED_FUNCTION_H_
