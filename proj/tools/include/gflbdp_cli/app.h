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

#ifndef GFLBDP_CLI_APP_H_
#define GFLBDP_CLI_APP_H_

#include <iosfwd>

namespace gflbdp::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;        // bad flags or domain errors
inline constexpr int kExitNumeric = 3;      // series divergence, numeric failure
inline constexpr int kExitUnsupported = 4;  // simulation regime or caps

// Environment variable consulted for the default Monte Carlo seed.
inline constexpr const char* kSeedEnv = "GFLBDP_SEED";
inline constexpr unsigned long long kDefaultSeed = 20260101ULL;

// Parses argv and runs one command. Results go to `out` (or the --output
// file), diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gflbdp::cli

#endif  // GFLBDP_CLI_APP_H_
