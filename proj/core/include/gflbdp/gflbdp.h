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

// Umbrella header for the gflbdp library.

#ifndef GFLBDP_GFLBDP_H_
#define GFLBDP_GFLBDP_H_

#include "gflbdp/analytics.h"
#include "gflbdp/errors.h"
#include "gflbdp/fractional_operators.h"
#include "gflbdp/laplace.h"
#include "gflbdp/monte_carlo.h"
#include "gflbdp/process_params.h"
#include "gflbdp/quadrature.h"
#include "gflbdp/rng.h"
#include "gflbdp/sampled_function.h"
#include "gflbdp/simulator.h"
#include "gflbdp/special_functions.h"
#include "gflbdp/stable.h"
#include "gflbdp/time_change.h"

#endif  // GFLBDP_GFLBDP_H_
