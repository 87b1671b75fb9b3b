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

// Acceptance driver: one PASS/FAIL line per criterion, with the measured
// discrepancy and wall time. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gflbdp/gflbdp.h"
#include "gflbdp_cli/verify.h"

namespace {

using namespace gflbdp;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Accumulates sub-checks of one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) out_.passed = false;
    if (!ok || detail_count_ < 4) {
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += (ok ? "" : "FAILED ") + what;
      ++detail_count_;
    }
  }
  // |a - b| <= tol * scale, scale = max(|b|, 1) when relative.
  void near(double a, double b, double tol, const std::string& what, bool relative = true) {
    const double scale = relative ? std::max(std::fabs(b), 1e-300) : 1.0;
    const double err = std::fabs(a - b) / scale;
    std::ostringstream os;
    os.precision(3);
    os << what << " err=" << err;
    check(err <= tol, os.str());
  }
  // Monte Carlo estimate within k standard errors of an exact value.
  void within_se(double est, double se, double exact, const std::string& what, double k = 3.0) {
    const double z = se > 0 ? (est - exact) / se : (est == exact ? 0.0 : INFINITY);
    std::ostringstream os;
    os.precision(3);
    os << what << " z=" << z;
    check(std::fabs(z) <= k, os.str());
  }
  void suite(const std::vector<cli::CheckResult>& results, const std::string& name) {
    int passed = 0;
    double worst = 0.0;
    for (const auto& r : results) {
      passed += r.passed;
      if (r.tolerance > 0) worst = std::max(worst, r.error / r.tolerance);
      if (!r.passed) check(false, r.name + (r.note.empty() ? "" : " (" + r.note + ")"));
    }
    std::ostringstream os;
    os.precision(3);
    os << name << " " << passed << "/" << results.size() << " checks, worst err/tol=" << worst;
    check(passed == static_cast<int>(results.size()) && !results.empty(), os.str());
  }
  Outcome take() { return out_; }

 private:
  Outcome out_;
  int detail_count_ = 0;
};

ProcessParams make(double lambda, double mu, double alpha, double beta, double gamma,
                   double rho) {
  ProcessParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.rho = rho;
  return p;
}

MCOptions mc_options(std::int64_t n) {
  MCOptions o;
  o.n_paths = n;
  o.seed = 20260101;
  return o;
}

Outcome c1() {
  Criterion c;
  c.near(extinction_prob(make(1, 1, 0.5, 1, 0, 1), 1.0), 0.5, 1e-10, "P{N(1)=0}", false);
  c.near(state_prob(make(1, 1, 0.5, 1, 0, 1), 1, 1.0), 0.25, 1e-10, "P{N(1)=1}", false);
  return c.take();
}

Outcome c2() {
  Criterion c;
  for (double t : {0.1, 1.0, 2.0}) {
    c.near(mean_gflbdp(make(2, 1, 0.5, 1, 0, 1), t), std::exp(t), 1e-9,
           "t=" + std::to_string(t).substr(0, 3));
  }
  return c.take();
}

Outcome c3() {
  Criterion c;
  const double lambda = 2, mu = 1, a = lambda - mu;
  for (double rho : {0.6, 0.8, 1.0}) {
    for (double t : {0.5, 1.0}) {
      const double tr = std::pow(t, rho);
      const double e1 = mittag_leffler(rho, 1.0, a * tr);
      const double e2 = mittag_leffler(rho, 1.0, 2 * a * tr);
      const double closed = 2 * lambda / a * e2 - (lambda + mu) / a * e1 - e1 * e1;
      std::ostringstream os;
      os << "rho=" << rho << " t=" << t;
      c.near(variance_gflbdp(make(lambda, mu, 0.5, 1, 0, rho), t), closed, 1e-8, os.str());
    }
  }
  return c.take();
}

Outcome c4() {
  Criterion c;
  c.suite(cli::run_suite("laplace"), "series vs Gaver-Stehfest");
  return c.take();
}

Outcome c5() {
  Criterion c;
  const auto opts = mc_options(20000);
  MCQuery q;
  q.kind = MCKind::kLaplaceQ;
  q.z = 1.0;
  const auto lq = mc_estimate(make(1, 0.5, 0.5, 1, 0, 0.7), q, opts);
  c.within_se(lq.value, lq.std_error, mittag_leffler(0.7, 1.0, -1.0), "E exp(-Q(1))");

  const ProcessParams p = make(1, 0.5, 0.5, 1, 0.9, 0.8);
  q.kind = MCKind::kMean;
  const auto m = mc_estimate(p, q, opts);
  c.within_se(m.value, m.std_error, mean_gflbdp(p, 1.0), "mean");

  q.kind = MCKind::kExtinction;
  const auto e = mc_estimate(p, q, opts);
  c.within_se(e.value, e.std_error, extinction_prob(p, 1.0), "extinction");
  return c.take();
}

Outcome c6() {
  Criterion c;
  const double lambda = 1, mu = 0.5, t = 1;
  const int n_paths = 100000;
  std::vector<double> counts(11, 0.0);
  for (int i = 0; i < n_paths; ++i) {
    Rng rng(20260101, static_cast<std::uint64_t>(i));
    const auto s = run_lbdp(lambda, mu, 1, t, rng);
    if (s.state <= 10) counts[static_cast<std::size_t>(s.state)] += 1;
  }
  int worst_n = 0;
  double worst_z = 0.0;
  bool ok = true;
  for (int n = 0; n <= 10; ++n) {
    const double exact = n == 0 ? classical_extinction(lambda, mu, t)
                                : classical_state_prob(n, lambda, mu, t);
    const double f = counts[static_cast<std::size_t>(n)] / n_paths;
    const double se = std::sqrt(std::max(exact * (1 - exact), 1e-300) / n_paths);
    const double z = (f - exact) / se;
    if (std::fabs(z) > std::fabs(worst_z)) {
      worst_z = z;
      worst_n = n;
    }
    ok = ok && std::fabs(z) <= 3.0;
  }
  std::ostringstream os;
  os.precision(3);
  os << "n=0..10 worst z=" << worst_z << " at n=" << worst_n;
  c.check(ok, os.str());
  return c.take();
}

Outcome c7() {
  Criterion c;
  c.suite(cli::run_suite("pde"), "residual rows n=0..2 on [0.2, 2]");
  return c.take();
}

Outcome c8() {
  Criterion c;
  struct Case {
    ProcessParams p;
    PrabhakarIntegralParams ip;
  };
  const std::vector<Case> cases = {
      {make(1, 0.5, 0.5, 1, 0.9, 0.8), {0.5, 0.7, 0.5, 1.2}},
      {make(2, 1, 0.7, 0.5, 0.4, 0.3), {0.6, 1.0, 0.3, 0.5}},
  };
  const double t = 1.5;
  int k = 0;
  for (const auto& cs : cases) {
    const auto grid = residual_grid(t, 400);
    const auto mean = SampledFunction::sample(
        [&](double s) { return mean_gflbdp(cs.p, s); }, grid);
    const auto kernel = PrabhakarKernel::from(cs.ip);
    c.near(prabhakar_integral_apply(mean, kernel, t), mean_prabhakar_integral(cs.p, cs.ip, t),
           1e-4, "set " + std::to_string(++k));
  }
  return c.take();
}

Outcome c9(const std::string& csv_dir) {
  Criterion c;
  cli::SuiteOptions opts;
  opts.csv_dir = csv_dir;
  c.suite(cli::run_suite("figures", opts), "orderings at t=5");
  if (!csv_dir.empty()) c.check(true, "CSV written to " + csv_dir);
  return c.take();
}

Outcome c10() {
  Criterion c;
  const double u = 0.5, v = 0.3, t = 1.0;
  const auto exact = joint_cf_classical(u, v, 1.0, 0.5, t);
  MCQuery q;
  q.kind = MCKind::kJointCF;
  q.u = u;
  q.v = v;
  q.t = t;
  const auto e = mc_estimate(make(1, 0.5, 0.5, 1, 0, 1), q, mc_options(100000));
  c.within_se(e.value, e.std_error, exact.real(), "MC Re");
  c.within_se(e.im_value, e.im_std_error, exact.imag(), "MC Im");
  const auto tc = joint_cf_gflbdp(u, v, make(1, 0.5, 0.5, 1, 0, 1), t);
  c.near(std::abs(tc - exact), 0.0, 1e-6, "time-changed vs classical", false);
  return c.take();
}

Outcome c11() {
  Criterion c;
  GeneticParams gp;
  gp.M = 10;
  gp.n0 = 5;
  gp.lambda = 1.0;
  gp.mu = 1.0;
  gp.rho = 1.0;
  MCQuery q;
  q.kind = MCKind::kGeneticMean;
  q.t = 1.0;
  const auto e = mc_estimate(gp, q, mc_options(100000));
  c.within_se(e.value, e.std_error, genetic_mean(gp, 1.0), "bounded Gillespie mean");

  // Off-equilibrium start so the average is not trivially constant.
  GeneticParams g2 = gp;
  g2.n0 = 1;
  g2.mu = 2.0;
  g2.rho = 0.7;
  const double t = 2.0;
  // The mean is a power series in s^rho, so s = t x^10 makes the integrand
  // smooth at the origin.
  const double avg = integrate([&](double x) {
                       const double x9 = std::pow(x, 9);
                       return genetic_mean(g2, t * x9 * x) * 10.0 * x9;
                     }, 0.0, 1.0, QuadratureConfig{1e-13, 0.0, 18}).value;
  c.near(genetic_avg_type_h(g2, t), avg, 1e-8, "time average vs quadrature");
  return c.take();
}

Outcome c12() {
  Criterion c;
  const ProcessParams p = make(1, 0.5, 0.5, 1, 0.9, 0.8);
  const double t = 1e3;
  c.near(asymptotic_extinction(p, t), extinction_prob(p, t), 0.02, "t=1e3");
  return c.take();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks for the gflbdp library");
  std::string csv_dir;
  app.add_option("--csv-dir", csv_dir, "Directory for the figure CSV files");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"classical reductions", c1},
      {"mean reduction", c2},
      {"variance reduction", c3},
      {"dual-route transform oracle", c4},
      {"Monte Carlo vs analytics", c5},
      {"Gillespie pmf", c6},
      {"governing-equation residual", c7},
      {"Prabhakar-integral oracle pair", c8},
      {"figure orderings", [&] { return c9(csv_dir); }},
      {"joint characteristic function", c10},
      {"genetic model", c11},
      {"asymptotics", c12},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.passed;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures ? "FAILED" : "OK",
              criteria.size() - failures, criteria.size());
  return failures ? 1 : 0;
}
