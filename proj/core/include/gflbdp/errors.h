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

#ifndef GFLBDP_ERRORS_H_
#define GFLBDP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gflbdp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or parameter outside the admissible region.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series could not be summed to the requested tolerance, either because
// the term cap was reached or because cancellation destroyed the result.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double largest_term, int terms)
      : Error(what), largest_term_(largest_term), terms_(terms) {}

  double largest_term() const { return largest_term_; }
  int terms() const { return terms_; }

 private:
  double largest_term_;
  int terms_;
};

// Quadrature or other numerical procedure failed to reach its target.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double achieved = 0.0)
      : Error(what), achieved_(achieved) {}

  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// Gaver-Stehfest partial sums blew up; a contour method is required.
class InversionUnstableError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Adaptive horizon doubling or path length cap exceeded.
class HorizonError : public Error {
 public:
  using Error::Error;
};

// Parameters are valid for the analytic formulas but not for simulation.
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. negative variance).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gflbdp

#endif  // GFLBDP_ERRORS_H_
