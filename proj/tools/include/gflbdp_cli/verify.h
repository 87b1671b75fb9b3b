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

#ifndef GFLBDP_CLI_VERIFY_H_
#define GFLBDP_CLI_VERIFY_H_

#include <string>
#include <vector>

#include "gflbdp/process_params.h"

namespace gflbdp::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double error = 0.0;      // measured discrepancy (relative unless noted)
  double tolerance = 0.0;
  std::string note;        // exception text or extra context
};

struct SuiteOptions {
  // When non-empty the figures suite writes fig1_mean.csv and fig2_mean.csv
  // into this directory.
  std::string csv_dir;
};

// "reductions", "laplace", "pde", "asymptotics" and "figures".
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name. Exceptions raised inside a
// check are caught and reported as a failed check.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts = {});

// Mean curves behind the two figures: one series per rho (figure 1) or
// per beta (figure 2), all with lambda - mu = 1.
struct FigureSeries {
  std::string label;
  ProcessParams params;
  std::vector<double> mean;
};

std::vector<FigureSeries> figure1_series(const std::vector<double>& t_grid);
std::vector<FigureSeries> figure2_series(const std::vector<double>& t_grid);

// Wide CSV: header `t,<label>,...`, one row per grid point.
void write_figure_csv(const std::string& path, const std::vector<double>& t_grid,
                      const std::vector<FigureSeries>& series);

}  // namespace gflbdp::cli

#endif  // GFLBDP_CLI_VERIFY_H_
