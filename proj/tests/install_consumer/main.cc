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

#include <cmath>
#include <cstdio>

#include "gflbdp/gflbdp.h"

int main() {
  gflbdp::ProcessParams p;
  p.lambda = 1.0;
  p.mu = 1.0;
  const double e = gflbdp::extinction_prob(p, 1.0);
  std::printf("extinction %.12f\n", e);
  return std::fabs(e - 0.5) < 1e-10 ? 0 : 1;
}
