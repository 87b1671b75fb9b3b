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

#include "gflbdp/sampled_function.h"

#include <algorithm>
#include <cmath>
#include <sstream>

// pchip.hpp in Boost 1.74 calls unqualified isnan; math.h provides it.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include "gflbdp/errors.h"

namespace gflbdp {

struct SampledFunction::Cubic {
  boost::math::interpolators::pchip<std::vector<double>> spline;
};

SampledFunction::SampledFunction(std::vector<double> grid,
                                 std::vector<double> values,
                                 Interpolation interp)
    : grid_(std::move(grid)), values_(std::move(values)), interp_(interp) {
  if (grid_.size() != values_.size()) {
    throw DomainError("sampled function: grid and values differ in length");
  }
  if (grid_.size() < 2) throw DomainError("sampled function needs two points");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i])) {
      throw DomainError("sampled function: non-finite grid point or value");
    }
    if (i > 0 && !(grid_[i] > grid_[i - 1])) {
      throw DomainError("sampled function: grid must be strictly increasing");
    }
  }
  if (interp_ == Interpolation::kCubicMonotone) {
    if (grid_.size() < 4) {
      throw DomainError("monotone cubic interpolation needs four points");
    }
    auto x = grid_;
    auto y = values_;
    cubic_ = std::make_shared<const Cubic>(
        Cubic{boost::math::interpolators::pchip<std::vector<double>>(
            std::move(x), std::move(y))});
  }
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& f,
                                        std::vector<double> grid,
                                        Interpolation interp) {
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), f);
  return SampledFunction(std::move(grid), std::move(values), interp);
}

std::size_t SampledFunction::interval(double t) const {
  if (t < grid_.front() || t > grid_.back() || std::isnan(t)) {
    std::ostringstream os;
    os << "time " << t << " outside the sampled range [" << grid_.front()
       << ", " << grid_.back() << "]";
    throw DomainError(os.str());
  }
  auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  return std::min(i == 0 ? 0 : i - 1, grid_.size() - 2);
}

double SampledFunction::operator()(double t) const {
  std::size_t i = interval(t);
  if (cubic_) return cubic_->spline(t);
  double w = (t - grid_[i]) / (grid_[i + 1] - grid_[i]);
  return (1.0 - w) * values_[i] + w * values_[i + 1];
}

double SampledFunction::derivative(double t) const {
  std::size_t i = interval(t);
  if (cubic_) return cubic_->spline.prime(t);
  return (values_[i + 1] - values_[i]) / (grid_[i + 1] - grid_[i]);
}

std::vector<double> residual_grid(double t_max, int n, double t_first) {
  if (!(t_max > 0.0) || n < 8 || !(t_first > 0.0) || !(t_first < t_max)) {
    throw DomainError("residual_grid: need t_max > t_first > 0 and n >= 8");
  }
  // Half the points are spent geometrically below t_max / 20.
  const int n_geo = n / 2;
  const double t_switch = std::max(t_first * 2.0, t_max / 20.0);
  std::vector<double> g{0.0};
  for (int i = 0; i < n_geo; ++i) {
    g.push_back(t_first * std::pow(t_switch / t_first, double(i) / n_geo));
  }
  const int n_uni = n - n_geo;
  for (int i = 0; i < n_uni; ++i) {
    g.push_back(t_switch + (t_max - t_switch) * double(i) / (n_uni - 1));
  }
  return g;
}

}  // namespace gflbdp
